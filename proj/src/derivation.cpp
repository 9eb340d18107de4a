#include "logder/derivation.hpp"

#include "logder/error.hpp"

namespace logder {

Derivation::Derivation(int nvars, int degree) : nvars_(nvars), degree_(degree) {
  components_.assign(static_cast<std::size_t>(nvars), HomPoly(nvars, degree));
}

Derivation::Derivation(std::vector<HomPoly> components) : components_(std::move(components)) {
  if (components_.empty()) throw Error(ErrorKind::InvalidArgument, "derivation needs components");
  nvars_ = components_[0].nvars();
  degree_ = components_[0].degree();
  if (static_cast<int>(components_.size()) != nvars_) {
    throw Error(ErrorKind::InvalidArgument, "derivation needs one component per variable");
  }
  for (const auto& c : components_) {
    if (c.nvars() != nvars_ || c.degree() != degree_) {
      throw Error(ErrorKind::InvalidArgument, "derivation components must share nvars and degree");
    }
  }
}

Derivation Derivation::euler(int nvars) {
  std::vector<HomPoly> comps;
  for (int i = 0; i < nvars; ++i) comps.push_back(HomPoly::variable(nvars, i));
  return Derivation(std::move(comps));
}

bool Derivation::is_zero() const {
  for (const auto& c : components_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

Vector Derivation::flatten() const {
  Vector out;
  out.reserve(components_.size() * basis_size(nvars_, degree_));
  for (const auto& c : components_) out.insert(out.end(), c.coeffs().begin(), c.coeffs().end());
  return out;
}

Derivation Derivation::from_flat(int nvars, int degree, std::span<const Scalar> flat) {
  const std::size_t n = basis_size(nvars, degree);
  if (flat.size() != n * static_cast<std::size_t>(nvars)) {
    throw Error(ErrorKind::InvalidArgument, "from_flat: wrong coefficient count");
  }
  std::vector<HomPoly> comps;
  for (int i = 0; i < nvars; ++i) {
    auto part = flat.subspan(static_cast<std::size_t>(i) * n, n);
    comps.emplace_back(nvars, degree, Vector(part.begin(), part.end()));
  }
  return Derivation(std::move(comps));
}

Derivation& Derivation::operator+=(const Derivation& o) {
  if (o.nvars_ != nvars_ || o.degree_ != degree_) {
    throw Error(ErrorKind::InvalidArgument, "derivation +: degree or nvars mismatch");
  }
  for (std::size_t i = 0; i < components_.size(); ++i) components_[i] += o.components_[i];
  return *this;
}

Derivation& Derivation::operator-=(const Derivation& o) {
  if (o.nvars_ != nvars_ || o.degree_ != degree_) {
    throw Error(ErrorKind::InvalidArgument, "derivation -: degree or nvars mismatch");
  }
  for (std::size_t i = 0; i < components_.size(); ++i) components_[i] -= o.components_[i];
  return *this;
}

Derivation& Derivation::operator*=(const Scalar& c) {
  for (auto& p : components_) p *= c;
  return *this;
}

Derivation operator*(const HomPoly& g, const Derivation& d) {
  std::vector<HomPoly> comps;
  for (const auto& c : d.components_) comps.push_back(g * c);
  return Derivation(std::move(comps));
}

std::string Derivation::to_string(std::span<const std::string> names) const {
  std::string out;
  for (int i = 0; i < nvars_; ++i) {
    if (components_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + components_[i].to_string(names) + ")*d/d" + names[i];
  }
  return out.empty() ? "0" : out;
}

std::string Derivation::to_string() const {
  auto names = default_var_names(nvars_);
  return to_string(names);
}

}  // namespace logder
