#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "logder/arrangement.hpp"
#include "logder/derivation.hpp"
#include "logder/error.hpp"
#include "logder/graphic.hpp"

namespace logder {

/// Parse failure carrying a 0-based character position (kind ParseError or NonlinearTerm).
class SyntaxError : public Error {
 public:
  SyntaxError(ErrorKind kind, std::size_t position, const std::string& what)
      : Error(kind, what + " at position " + std::to_string(position)), position_(position), detail_(what) {}
  std::size_t position() const noexcept { return position_; }
  /// Message without the kind prefix and position suffix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t position_;
  std::string detail_;
};

/// Homogeneous polynomial from text such as "x^2 - 1/2*y*z", "(1+w)x", "3xy".
/// `w` is the cube root of unity unless it is a variable name. The zero polynomial
/// gets `zero_degree`. Throws SyntaxError.
HomPoly parse_polynomial(std::string_view text, std::span<const std::string> names, int zero_degree = 0);

/// Raw coefficients of a linear form ("2x+3y-z" gives (2, 3, -1)). Throws SyntaxError
/// (NonlinearTerm for products of variables, powers, or constants).
Vector parse_linear_coeffs(std::string_view text, std::span<const std::string> names);
LinearForm parse_linear_form(std::string_view text, std::span<const std::string> names);

struct ArrangementText {
  std::vector<std::string> names;
  Arrangement arrangement;
};

/// Arrangement file: optional "vars x y z" (or "vars 4") line, then one form per line
/// as an expression or a whitespace-separated coefficient tuple; '#' starts a comment.
/// Errors name the 1-based line.
ArrangementText parse_arrangement(std::string_view text);
ArrangementText read_arrangement_file(const std::string& path);
std::string format_arrangement(const Arrangement& a, std::span<const std::string> names);
std::string format_arrangement(const Arrangement& a);

/// Derivation file: optional "vars" line, then one derivation per line with its
/// components separated by ';'.
std::vector<Derivation> parse_derivations(std::string_view text, std::span<const std::string> default_names);
std::vector<Derivation> read_derivation_file(const std::string& path, std::span<const std::string> default_names);
std::string format_derivations(const std::vector<Derivation>& ds, std::span<const std::string> names);

/// {"n": 4, "edges": [[1,2],[2,3]]} or {"adjacency": [[2],[1,3],[2]]} (vertex i+1 lists
/// its neighbours). Throws ParseError.
Graph parse_graph_json(std::string_view text);

std::string read_text_file(const std::string& path);

}  // namespace logder
