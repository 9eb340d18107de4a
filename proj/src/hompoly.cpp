#include "logder/hompoly.hpp"

#include <sstream>

#include "logder/error.hpp"

namespace logder {

namespace {

void require_same_space(const HomPoly& a, const HomPoly& b, const char* op) {
  if (a.nvars() != b.nvars() || a.degree() != b.degree()) {
    throw Error(ErrorKind::InvalidArgument,
                std::string(op) + ": mismatched polynomial spaces (nvars " + std::to_string(a.nvars()) +
                    "/" + std::to_string(b.nvars()) + ", degree " + std::to_string(a.degree()) + "/" +
                    std::to_string(b.degree()) + ")");
  }
}

}  // namespace

HomPoly::HomPoly(int nvars, int degree)
    : nvars_(nvars), degree_(degree), coeffs_(basis_size(nvars, degree)) {
  if (nvars < 1 || degree < 0) {
    throw Error(ErrorKind::InvalidArgument, "HomPoly needs nvars >= 1 and degree >= 0");
  }
}

HomPoly::HomPoly(int nvars, int degree, std::vector<Scalar> coeffs)
    : nvars_(nvars), degree_(degree), coeffs_(std::move(coeffs)) {
  if (nvars < 1 || degree < 0 || coeffs_.size() != basis_size(nvars, degree)) {
    throw Error(ErrorKind::InvalidArgument, "HomPoly coefficient count does not match basis size");
  }
}

HomPoly HomPoly::constant(int nvars, Scalar c) {
  HomPoly p(nvars, 0);
  p.coeffs_[0] = std::move(c);
  return p;
}

HomPoly HomPoly::variable(int nvars, int i) {
  HomPoly p(nvars, 1);
  p.coeffs_.at(static_cast<std::size_t>(i)) = 1;
  return p;
}

HomPoly HomPoly::linear(std::span<const Scalar> coeffs) {
  HomPoly p(static_cast<int>(coeffs.size()), 1);
  for (std::size_t i = 0; i < coeffs.size(); ++i) p.coeffs_[i] = coeffs[i];
  return p;
}

HomPoly HomPoly::monomial(std::span<const int> exps, Scalar c) {
  int deg = 0;
  for (int e : exps) deg += e;
  HomPoly p(static_cast<int>(exps.size()), deg);
  p.coeffs_[monomial_index(exps)] = std::move(c);
  return p;
}

bool HomPoly::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

std::size_t HomPoly::leading_index() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return i;
  }
  return coeffs_.size();
}

HomPoly HomPoly::partial(int var) const {
  if (degree_ == 0) {
    throw Error(ErrorKind::InvalidArgument, "partial derivative of a constant has no degree");
  }
  HomPoly out(nvars_, degree_ - 1);
  const auto& basis = monomial_basis(nvars_, degree_);
  Exponent e;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero() || basis[k][var] == 0) continue;
    e = basis[k];
    int power = e[var]--;
    out.coeffs_[monomial_index(e)] += coeffs_[k] * Scalar(power);
  }
  return out;
}

Scalar HomPoly::evaluate(std::span<const Scalar> point) const {
  if (static_cast<int>(point.size()) != nvars_) {
    throw Error(ErrorKind::InvalidArgument, "evaluate: point dimension mismatch");
  }
  const auto& basis = monomial_basis(nvars_, degree_);
  Scalar total;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    Scalar term = coeffs_[k];
    for (int i = 0; i < nvars_ && !term.is_zero(); ++i) {
      for (int j = 0; j < basis[k][i]; ++j) term *= point[i];
    }
    total += term;
  }
  return total;
}

HomPoly& HomPoly::operator+=(const HomPoly& o) {
  require_same_space(*this, o, "+");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!o.coeffs_[i].is_zero()) coeffs_[i] += o.coeffs_[i];
  }
  return *this;
}

HomPoly& HomPoly::operator-=(const HomPoly& o) {
  require_same_space(*this, o, "-");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!o.coeffs_[i].is_zero()) coeffs_[i] -= o.coeffs_[i];
  }
  return *this;
}

HomPoly& HomPoly::operator*=(const Scalar& c) {
  for (auto& x : coeffs_) {
    if (!x.is_zero()) x *= c;
  }
  return *this;
}

HomPoly HomPoly::operator-() const {
  HomPoly out = *this;
  for (auto& x : out.coeffs_) x = -x;
  return out;
}

HomPoly operator*(const HomPoly& a, const HomPoly& b) {
  if (a.nvars_ != b.nvars_) throw Error(ErrorKind::InvalidArgument, "*: nvars mismatch");
  HomPoly out(a.nvars_, a.degree_ + b.degree_);
  const auto& ba = monomial_basis(a.nvars_, a.degree_);
  const auto& bb = monomial_basis(b.nvars_, b.degree_);
  Exponent e(static_cast<std::size_t>(a.nvars_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      for (int v = 0; v < a.nvars_; ++v) e[v] = ba[i][v] + bb[j][v];
      out.coeffs_[monomial_index(e)] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

HomPoly pow(const HomPoly& p, int e) {
  HomPoly out = HomPoly::constant(p.nvars(), Scalar(1));
  for (int i = 0; i < e; ++i) out = out * p;
  return out;
}

std::vector<std::string> default_var_names(int nvars) {
  if (nvars == 3) return {"x", "y", "z"};
  std::vector<std::string> names;
  for (int i = 1; i <= nvars; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

std::string HomPoly::to_string(std::span<const std::string> names) const {
  const auto& basis = monomial_basis(nvars_, degree_);
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Scalar& c = coeffs_[k];
    if (c.is_zero()) continue;
    std::string mono;
    for (int v = 0; v < nvars_; ++v) {
      if (basis[k][v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[v];
      if (basis[k][v] > 1) mono += "^" + std::to_string(basis[k][v]);
    }
    std::string coef;
    bool negative = false;
    if (c.is_rational()) {
      Rational r = c.re();
      if (sgn(r) < 0) {
        negative = true;
        r = -r;
      }
      if (r != 1 || mono.empty()) coef = r.get_str();
    } else {
      coef = "(" + c.to_string() + ")";
    }
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    os << coef;
    if (!coef.empty() && !mono.empty()) os << "*";
    os << mono;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::string HomPoly::to_string() const {
  auto names = default_var_names(nvars_);
  return to_string(names);
}

}  // namespace logder
