#include "logder/algebra.hpp"

#include "logder/error.hpp"

namespace logder {

HomPoly apply_derivation(const Derivation& theta, const HomPoly& f) {
  if (theta.nvars() != f.nvars()) {
    throw Error(ErrorKind::InvalidArgument, "apply_derivation: nvars mismatch");
  }
  const int out_degree = theta.degree() + f.degree() - 1;
  if (out_degree < 0) {
    throw Error(ErrorKind::InvalidArgument, "apply_derivation: constant derivation on a constant");
  }
  HomPoly out(f.nvars(), out_degree);
  if (f.degree() == 0) return out;
  for (int i = 0; i < f.nvars(); ++i) {
    if (theta[i].is_zero()) continue;
    HomPoly d = f.partial(i);
    if (d.is_zero()) continue;
    out += theta[i] * d;
  }
  return out;
}

LinearDivision divide_by_linear(const HomPoly& f, const LinearForm& l) {
  if (l.nvars() != f.nvars()) throw Error(ErrorKind::InvalidArgument, "divide_by_linear: nvars mismatch");
  const int n = f.nvars();
  const int d = f.degree();
  const int p = l.pivot();
  HomPoly work = f;
  if (d == 0) {
    LinearDivision out{work, std::nullopt};
    if (work.is_zero()) out.quotient = HomPoly(n, 0);
    return out;
  }
  HomPoly quotient(n, d - 1);
  const auto& basis = monomial_basis(n, d);
  Exponent m;
  // Eliminate x_p powers from the top down; l has coefficient 1 on x_p, so each step
  // clears one monomial and pushes the rest of l onto monomials of lower x_p-degree.
  for (int e = d; e >= 1; --e) {
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (basis[k][p] != e || work[k].is_zero()) continue;
      const Scalar c = work[k];
      m = basis[k];
      --m[p];
      quotient[monomial_index(m)] += c;
      for (int j = 0; j < n; ++j) {
        if (l[j].is_zero()) continue;
        ++m[j];
        work[monomial_index(m)] -= c * l[j];
        --m[j];
      }
    }
  }
  LinearDivision out{std::move(work), std::nullopt};
  if (out.remainder.is_zero()) out.quotient = std::move(quotient);
  return out;
}

Matrix evaluation_matrix(std::span<const Vector> points, int degree) {
  const int n = points.empty() ? 1 : static_cast<int>(points[0].size());
  const auto& basis = monomial_basis(n, degree);
  Matrix m(points.size(), basis.size());
  for (std::size_t r = 0; r < points.size(); ++r) {
    if (static_cast<int>(points[r].size()) != n) {
      throw Error(ErrorKind::InvalidArgument, "evaluation_matrix: points of different dimension");
    }
    for (std::size_t k = 0; k < basis.size(); ++k) {
      Scalar v(1);
      for (int i = 0; i < n && !v.is_zero(); ++i) {
        for (int j = 0; j < basis[k][i]; ++j) v *= points[r][i];
      }
      m(r, k) = std::move(v);
    }
  }
  return m;
}

std::size_t vanishing_dimension(std::span<const Vector> points, int degree) {
  if (points.empty()) throw Error(ErrorKind::InvalidArgument, "vanishing_dimension needs points");
  Matrix m = evaluation_matrix(points, degree);
  return m.cols() - rank(m);
}

}  // namespace logder
