#include "logder/arrangement.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "logder/error.hpp"

namespace logder {

Arrangement::Arrangement(std::vector<LinearForm> forms) : forms_(std::move(forms)) {
  if (forms_.empty()) throw Error(ErrorKind::InvalidArgument, "arrangement needs at least one form");
  nvars_ = forms_[0].nvars();
  for (std::size_t i = 0; i < forms_.size(); ++i) {
    if (forms_[i].nvars() != nvars_) throw Error(ErrorKind::InvalidArgument, "forms differ in nvars");
    for (std::size_t j = 0; j < i; ++j) {
      if (forms_[i] == forms_[j]) {
        throw Error(ErrorKind::DuplicateHyperplane,
                    "forms " + std::to_string(j + 1) + " and " + std::to_string(i + 1) + " are proportional (" +
                        forms_[i].to_string() + ")");
      }
    }
  }
  rank_ = logder::rank(coefficient_matrix());
}

std::optional<std::size_t> Arrangement::index_of(const LinearForm& l) const {
  auto it = std::find(forms_.begin(), forms_.end(), l);
  if (it == forms_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - forms_.begin());
}

std::size_t Arrangement::require_index(const LinearForm& l) const {
  auto i = index_of(l);
  if (!i) throw Error(ErrorKind::NotMember, l.to_string() + " is not a line of the arrangement");
  return *i;
}

Matrix Arrangement::coefficient_matrix() const {
  Matrix m(forms_.size(), static_cast<std::size_t>(nvars_));
  for (std::size_t i = 0; i < forms_.size(); ++i) {
    for (int j = 0; j < nvars_; ++j) m(i, j) = forms_[i][j];
  }
  return m;
}

HomPoly Arrangement::defining_polynomial() const {
  HomPoly f = HomPoly::constant(nvars_, Scalar(1));
  for (const auto& l : forms_) f = f * l.to_poly();
  return f;
}

bool Arrangement::has_coordinate_triangle() const {
  if (nvars_ != 3 || forms_.size() < 3) return false;
  for (int i = 0; i < 3; ++i) {
    Vector e(3);
    e[i] = Scalar(1);
    if (forms_[i].coeffs() != e) return false;
  }
  return true;
}

Arrangement new_arrangement(const std::vector<Vector>& rows) {
  std::vector<LinearForm> forms;
  forms.reserve(rows.size());
  for (const auto& r : rows) forms.emplace_back(r);
  return Arrangement(std::move(forms));
}

namespace {

Vector cross(const Vector& u, const Vector& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

}  // namespace

std::vector<SingularPoint> singular_locus(const Arrangement& a) {
  if (a.nvars() != 3) throw Error(ErrorKind::InvalidArgument, "singular_locus needs a line arrangement (3 variables)");
  if (a.rank() < 2) throw Error(ErrorKind::RankTooLow, "singular_locus needs rank >= 2");
  std::map<Vector, std::vector<std::size_t>> points;
  const std::size_t s = a.size();
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = i + 1; j < s; ++j) {
      Vector p = normalize_projective(cross(a[i].coeffs(), a[j].coeffs()));
      if (points.contains(p)) continue;
      std::vector<std::size_t> inc;
      for (std::size_t k = 0; k < s; ++k) {
        if (a[k].evaluate(p).is_zero()) inc.push_back(k);
      }
      points.emplace(std::move(p), std::move(inc));
    }
  }
  std::vector<SingularPoint> out;
  out.reserve(points.size());
  for (auto& [p, inc] : points) out.push_back(SingularPoint{p, inc.size(), inc});
  return out;
}

ArrangementStats stats(const Arrangement& a) { return stats(a, singular_locus(a)); }

ArrangementStats stats(const Arrangement& a, const std::vector<SingularPoint>& sing) {
  ArrangementStats st;
  st.s = a.size();
  st.rank = a.rank();
  st.num_points = sing.size();
  st.lines.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) st.lines[i].index = i;
  for (const auto& p : sing) {
    st.m = std::max(st.m, p.multiplicity);
    st.multiplicities.push_back(p.multiplicity);
    if (p.multiplicity == 2) ++st.n2;
    if (p.multiplicity == 3) ++st.n3;
    for (auto i : p.incident) {
      ++st.lines[i].points;
      if (p.multiplicity == 2) ++st.lines[i].doubles;
      if (p.multiplicity == 3) ++st.lines[i].triples;
    }
  }
  st.M = st.m;
  std::sort(st.multiplicities.begin(), st.multiplicities.end(), std::greater<>());
  return st;
}

LineStats line_stats(const Arrangement& a, const LinearForm& h) {
  const std::size_t i = a.require_index(h);
  return stats(a).lines[i];
}

bool CountFormulaReport::ok() const {
  return global_residual == 0 &&
         std::all_of(line_residuals.begin(), line_residuals.end(), [](long r) { return r == 0; });
}

CountFormulaReport check_count_formulas(const Arrangement& a) {
  const auto sing = singular_locus(a);
  const long s = static_cast<long>(a.size());
  CountFormulaReport rep;
  rep.line_residuals.assign(a.size(), -(s - 1));
  rep.global_residual = -(s * (s - 1) / 2);
  for (const auto& p : sing) {
    const long mp = static_cast<long>(p.multiplicity);
    rep.global_residual += mp * (mp - 1) / 2;
    for (auto i : p.incident) rep.line_residuals[i] += mp - 1;
  }
  return rep;
}

Arrangement delete_index(const Arrangement& a, std::size_t i) {
  if (i >= a.size()) throw Error(ErrorKind::NotMember, "line index out of range");
  if (a.size() == 1) throw Error(ErrorKind::InvalidArgument, "cannot delete the only line");
  std::vector<LinearForm> forms;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (k != i) forms.push_back(a[k]);
  }
  return Arrangement(std::move(forms));
}

Arrangement delete_form(const Arrangement& a, const LinearForm& h) { return delete_index(a, a.require_index(h)); }

Arrangement add_form(const Arrangement& a, const LinearForm& l) {
  auto forms = a.forms();
  forms.push_back(l);
  return Arrangement(std::move(forms));
}

std::vector<SingularPoint> modular_points(const Arrangement& a) {
  const auto sing = singular_locus(a);
  std::vector<SingularPoint> out;
  for (std::size_t p = 0; p < sing.size(); ++p) {
    bool modular = true;
    for (std::size_t q = 0; q < sing.size() && modular; ++q) {
      if (q == p) continue;
      const auto& ip = sing[p].incident;
      const auto& iq = sing[q].incident;
      modular = std::find_first_of(ip.begin(), ip.end(), iq.begin(), iq.end()) != ip.end();
    }
    if (modular) out.push_back(sing[p]);
  }
  return out;
}

Arrangement change_coordinates(const Arrangement& a, const Matrix& t) {
  const auto n = static_cast<std::size_t>(a.nvars());
  if (t.rows() != n || t.cols() != n) throw Error(ErrorKind::InvalidArgument, "transform has wrong shape");
  if (determinant(t).is_zero()) throw Error(ErrorKind::SingularTransform, "transform is not invertible");
  std::vector<Vector> rows;
  for (const auto& l : a.forms()) {
    Vector r(n);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (!l[k].is_zero() && !t(k, j).is_zero()) r[j] += l[k] * t(k, j);
      }
    }
    rows.push_back(std::move(r));
  }
  return new_arrangement(rows);
}

Arrangement essentialize(const Arrangement& a) {
  if (a.rank() == static_cast<std::size_t>(a.nvars())) return a;
  const auto red = rref(a.coefficient_matrix());
  std::vector<Vector> rows;
  for (const auto& l : a.forms()) {
    Vector r;
    for (auto p : red.pivots) r.push_back(l[p]);
    rows.push_back(std::move(r));
  }
  return new_arrangement(rows);
}

Matrix inverse(const Matrix& t) {
  const std::size_t n = t.rows();
  if (t.cols() != n) throw Error(ErrorKind::InvalidArgument, "inverse of a non-square matrix");
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = t(i, j);
    aug(i, n + i) = Scalar(1);
  }
  const auto red = rref(std::move(aug));
  if (red.rank() < n || red.pivots[n - 1] != n - 1) {
    throw Error(ErrorKind::SingularTransform, "matrix is not invertible");
  }
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = red.reduced(i, n + j);
  }
  return out;
}

Matrix coordinate_triangle_transform(const Arrangement& a, std::size_t i, std::size_t j, std::size_t k) {
  if (a.nvars() != 3) throw Error(ErrorKind::InvalidArgument, "coordinate triangle needs 3 variables");
  Matrix c(3, 3);
  const std::size_t idx[3] = {i, j, k};
  for (std::size_t r = 0; r < 3; ++r) {
    if (idx[r] >= a.size()) throw Error(ErrorKind::NotMember, "line index out of range");
    for (std::size_t col = 0; col < 3; ++col) c(r, col) = a[idx[r]][col];
  }
  return inverse(c);
}

Arrangement move_to_coordinate_triangle(const Arrangement& a, std::size_t i, std::size_t j, std::size_t k) {
  const Arrangement moved = change_coordinates(a, coordinate_triangle_transform(a, i, j, k));
  std::vector<LinearForm> forms{moved[i], moved[j], moved[k]};
  for (std::size_t q = 0; q < moved.size(); ++q) {
    if (q != i && q != j && q != k) forms.push_back(moved[q]);
  }
  return Arrangement(std::move(forms));
}

}  // namespace logder
