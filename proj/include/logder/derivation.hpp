#pragma once

#include <span>
#include <string>
#include <vector>

#include "logder/hompoly.hpp"
#include "logder/matrix.hpp"

namespace logder {

/// theta = sum_i components[i] * d/dx_i, all components homogeneous of one degree.
class Derivation {
 public:
  Derivation() = default;
  Derivation(int nvars, int degree);
  explicit Derivation(std::vector<HomPoly> components);

  static Derivation euler(int nvars);

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  const std::vector<HomPoly>& components() const { return components_; }
  const HomPoly& operator[](std::size_t i) const { return components_[i]; }
  HomPoly& operator[](std::size_t i) { return components_[i]; }

  bool is_zero() const;

  /// Coefficients concatenated component by component (component-major).
  Vector flatten() const;
  static Derivation from_flat(int nvars, int degree, std::span<const Scalar> flat);

  Derivation& operator+=(const Derivation& o);
  Derivation& operator-=(const Derivation& o);
  Derivation& operator*=(const Scalar& c);

  friend Derivation operator+(Derivation a, const Derivation& b) { return a += b; }
  friend Derivation operator-(Derivation a, const Derivation& b) { return a -= b; }
  friend Derivation operator*(Derivation a, const Scalar& c) { return a *= c; }
  friend Derivation operator*(const HomPoly& g, const Derivation& d);
  friend bool operator==(const Derivation&, const Derivation&) = default;

  std::string to_string(std::span<const std::string> names) const;
  std::string to_string() const;

 private:
  int nvars_ = 0;
  int degree_ = 0;
  std::vector<HomPoly> components_;
};

}  // namespace logder
