#pragma once

#include <span>
#include <string>
#include <vector>

#include "logder/monomial.hpp"
#include "logder/scalar.hpp"

namespace logder {

/// Dense homogeneous polynomial. Coefficients are indexed by monomial_basis(nvars, degree);
/// the zero polynomial of any degree is representable.
class HomPoly {
 public:
  HomPoly() = default;
  HomPoly(int nvars, int degree);
  HomPoly(int nvars, int degree, std::vector<Scalar> coeffs);

  static HomPoly constant(int nvars, Scalar c);
  static HomPoly variable(int nvars, int i);
  static HomPoly linear(std::span<const Scalar> coeffs);
  static HomPoly monomial(std::span<const int> exps, Scalar c = Scalar(1));

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  const Scalar& operator[](std::size_t i) const { return coeffs_[i]; }
  Scalar& operator[](std::size_t i) { return coeffs_[i]; }
  const Scalar& coeff(std::span<const int> exps) const { return coeffs_[monomial_index(exps)]; }

  bool is_zero() const;
  /// Index of the first nonzero coefficient in basis order, or size() if zero.
  std::size_t leading_index() const;

  HomPoly partial(int var) const;
  Scalar evaluate(std::span<const Scalar> point) const;

  HomPoly& operator+=(const HomPoly& o);
  HomPoly& operator-=(const HomPoly& o);
  HomPoly& operator*=(const Scalar& c);
  HomPoly operator-() const;

  friend HomPoly operator+(HomPoly a, const HomPoly& b) { return a += b; }
  friend HomPoly operator-(HomPoly a, const HomPoly& b) { return a -= b; }
  friend HomPoly operator*(HomPoly a, const Scalar& c) { return a *= c; }
  friend HomPoly operator*(const Scalar& c, HomPoly a) { return a *= c; }
  friend HomPoly operator*(const HomPoly& a, const HomPoly& b);
  friend bool operator==(const HomPoly& a, const HomPoly& b) = default;

  std::string to_string(std::span<const std::string> names) const;
  std::string to_string() const;

 private:
  int nvars_ = 0;
  int degree_ = 0;
  std::vector<Scalar> coeffs_;
};

/// Variable names used for display: x, y, z for three variables, x1..xn otherwise.
std::vector<std::string> default_var_names(int nvars);

HomPoly pow(const HomPoly& p, int e);

}  // namespace logder
