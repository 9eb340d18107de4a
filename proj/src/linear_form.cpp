#include "logder/linear_form.hpp"

#include <algorithm>

#include "logder/error.hpp"

namespace logder {

Vector normalize_projective(Vector v) {
  auto it = std::find_if(v.begin(), v.end(), [](const Scalar& s) { return !s.is_zero(); });
  if (it == v.end()) throw Error(ErrorKind::ZeroForm, "zero vector has no projective class");
  if (!it->is_one()) {
    const Scalar inv = it->inverse();
    for (auto& s : v) {
      if (!s.is_zero()) s *= inv;
    }
  }
  return v;
}

LinearForm::LinearForm(Vector coeffs) : coeffs_(normalize_projective(std::move(coeffs))) {
  pivot_ = static_cast<int>(
      std::find_if(coeffs_.begin(), coeffs_.end(), [](const Scalar& s) { return !s.is_zero(); }) -
      coeffs_.begin());
}

Scalar LinearForm::evaluate(std::span<const Scalar> point) const {
  if (point.size() != coeffs_.size()) throw Error(ErrorKind::InvalidArgument, "evaluate: dimension mismatch");
  Scalar total;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero() && !point[i].is_zero()) total += coeffs_[i] * point[i];
  }
  return total;
}

std::strong_ordering operator<=>(const LinearForm& a, const LinearForm& b) {
  return std::lexicographical_compare_three_way(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(),
                                                b.coeffs_.end());
}

std::string LinearForm::to_string(std::span<const std::string> names) const {
  return to_poly().to_string(names);
}

std::string LinearForm::to_string() const { return to_poly().to_string(); }

}  // namespace logder
