#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "logder/hompoly.hpp"
#include "logder/matrix.hpp"

namespace logder {

/// Scales a nonzero vector so its first nonzero entry is 1. Throws on the zero vector.
Vector normalize_projective(Vector v);

/// Nonzero linear form, stored with first nonzero coefficient equal to 1, so that
/// proportional forms compare equal.
class LinearForm {
 public:
  LinearForm() = default;
  explicit LinearForm(Vector coeffs);  // throws Error(ZeroForm)

  int nvars() const { return static_cast<int>(coeffs_.size()); }
  const Vector& coeffs() const { return coeffs_; }
  const Scalar& operator[](std::size_t i) const { return coeffs_[i]; }
  /// Index of the first nonzero coefficient (that coefficient is 1).
  int pivot() const { return pivot_; }

  Scalar evaluate(std::span<const Scalar> point) const;
  HomPoly to_poly() const { return HomPoly::linear(coeffs_); }

  friend bool operator==(const LinearForm& a, const LinearForm& b) { return a.coeffs_ == b.coeffs_; }
  friend std::strong_ordering operator<=>(const LinearForm& a, const LinearForm& b);

  /// Expression form such as "x - 2*y + 1/2*z".
  std::string to_string(std::span<const std::string> names) const;
  std::string to_string() const;

 private:
  Vector coeffs_;
  int pivot_ = 0;
};

}  // namespace logder
