#include "logder/papermat.hpp"

#include <algorithm>

#include "logder/error.hpp"

namespace logder {

std::string_view to_string(Situation s) {
  switch (s) {
    case Situation::I: return "i";
    case Situation::II: return "ii";
    case Situation::III: return "iii";
    case Situation::IV: return "iv";
  }
  return "?";
}

std::size_t LineGrouping::count(Situation sit) const {
  return static_cast<std::size_t>(
      std::count_if(lines.begin(), lines.end(), [sit](const GroupedLine& g) { return g.situation == sit; }));
}

LineGrouping group_lines(const Arrangement& a) {
  if (!a.has_coordinate_triangle()) {
    throw Error(ErrorKind::MissingCoordinateTriangle, "arrangement must start with x, y, z");
  }
  LineGrouping g;
  g.s = a.size();
  for (std::size_t i = 3; i < a.size(); ++i) {
    GroupedLine gl;
    gl.index = i;
    Scalar a0 = a[i][0], b0 = a[i][1], c0 = a[i][2];
    if (c0.is_zero()) {
      gl.situation = Situation::I;
      gl.a = a0 / b0;
      gl.b = Scalar(1);
    } else {
      const Scalar inv = c0.inverse();
      gl.a = a0 * inv;
      gl.b = b0 * inv;
      gl.c = Scalar(1);
      gl.situation = b0.is_zero() ? Situation::II : a0.is_zero() ? Situation::III : Situation::IV;
    }
    g.lines.push_back(std::move(gl));
  }
  std::stable_sort(g.lines.begin(), g.lines.end(),
                   [](const GroupedLine& x, const GroupedLine& y) { return x.situation < y.situation; });
  g.j = 3 + g.count(Situation::I);
  g.l = g.j + g.count(Situation::II);
  g.n = g.l + g.count(Situation::III);
  return g;
}

long DerivationSystem::formula_rows() const {
  const long s = static_cast<long>(grouping.s);
  const long n = static_cast<long>(grouping.n);
  return degree == 2 ? 3 * s - 2 * n : 3 * (s - 1) - n;
}

std::vector<std::string> DerivationSystem::column_names() const {
  std::vector<std::string> out;
  const int k = degree == 2 ? 3 : 6;
  for (char c : {'q', 'r'}) {
    for (int i = 1; i <= k; ++i) out.push_back(std::string(1, c) + std::to_string(i));
  }
  return out;
}

namespace {

class SystemBuilder {
 public:
  SystemBuilder(const Arrangement& a, int degree) {
    sys_.degree = degree;
    sys_.grouping = group_lines(a);
    sys_.matrix = Matrix(0, degree == 2 ? 6 : 12);
  }

  void header(Situation sit, const std::string& rel, Vector row) {
    sys_.matrix.append_row(row);
    sys_.rows.push_back(RowSource{sit, rel, 0, true});
  }

  void row(const GroupedLine& g, const std::string& rel, Vector row) {
    sys_.matrix.append_row(row);
    sys_.rows.push_back(RowSource{g.situation, rel, g.index, false});
  }

  std::vector<const GroupedLine*> lines(Situation sit) const {
    std::vector<const GroupedLine*> out;
    for (const auto& g : sys_.grouping.lines) {
      if (g.situation == sit) out.push_back(&g);
    }
    return out;
  }

  DerivationSystem take() { return std::move(sys_); }

 private:
  DerivationSystem sys_;
};

const Scalar Z(0);
const Scalar O(1);

}  // namespace

DerivationSystem quadratic_matrix(const Arrangement& a) {
  SystemBuilder sb(a, 2);
  if (auto ls = sb.lines(Situation::I); !ls.empty()) {
    sb.header(Situation::I, "q3", {Z, Z, O, Z, Z, Z});
    for (auto* g : ls) sb.row(*g, "q1-a*q2", {O, -g->a, Z, Z, Z, Z});
  }
  if (auto ls = sb.lines(Situation::II); !ls.empty()) {
    sb.header(Situation::II, "r2", {Z, Z, Z, Z, O, Z});
    for (auto* g : ls) sb.row(*g, "r1-a*r3", {Z, Z, Z, O, Z, -g->a});
  }
  if (auto ls = sb.lines(Situation::III); !ls.empty()) {
    sb.header(Situation::III, "q1-r1", {O, Z, Z, -O, Z, Z});
    for (auto* g : ls) sb.row(*g, "(q2-r2)-b*(q3-r3)", {Z, O, -g->b, Z, -O, g->b});
  }
  if (auto ls = sb.lines(Situation::IV); !ls.empty()) {
    for (auto* g : ls) sb.row(*g, "iota", {g->b, -g->a, Z, Z, Z, Z});
    for (auto* g : ls) sb.row(*g, "varsigma", {Z, Z, Z, O, Z, -g->a});
    for (auto* g : ls) sb.row(*g, "dotless-i", {Z, -O, g->b, Z, O, -g->b});
  }
  return sb.take();
}

DerivationSystem cubic_matrix(const Arrangement& a) {
  SystemBuilder sb(a, 3);
  if (auto ls = sb.lines(Situation::I); !ls.empty()) {
    sb.header(Situation::I, "q3", {Z, Z, O, Z, Z, Z, Z, Z, Z, Z, Z, Z});
    for (auto* g : ls) {
      const Scalar& x = g->a;
      sb.row(*g, "q1+a^2*q2-a*q4", {O, x * x, Z, -x, Z, Z, Z, Z, Z, Z, Z, Z});
    }
    for (auto* g : ls) sb.row(*g, "q5-a*q6", {Z, Z, Z, Z, O, -g->a, Z, Z, Z, Z, Z, Z});
  }
  if (auto ls = sb.lines(Situation::II); !ls.empty()) {
    sb.header(Situation::II, "r2", {Z, Z, Z, Z, Z, Z, Z, O, Z, Z, Z, Z});
    for (auto* g : ls) {
      const Scalar& x = g->a;
      sb.row(*g, "r1+a^2*r3-a*r5", {Z, Z, Z, Z, Z, Z, O, Z, x * x, Z, -x, Z});
    }
    for (auto* g : ls) sb.row(*g, "r4-a*r6", {Z, Z, Z, Z, Z, Z, Z, Z, Z, O, Z, -g->a});
  }
  if (auto ls = sb.lines(Situation::III); !ls.empty()) {
    sb.header(Situation::III, "q1-r1", {O, Z, Z, Z, Z, Z, -O, Z, Z, Z, Z, Z});
    for (auto* g : ls) {
      const Scalar& y = g->b;
      const Scalar y2 = y * y;
      sb.row(*g, "(q2-r2)+b^2*(q3-r3)-b*(q6-r6)", {Z, O, y2, Z, Z, -y, Z, -O, -y2, Z, Z, y});
    }
    for (auto* g : ls) {
      const Scalar& y = g->b;
      sb.row(*g, "(q4-r4)-b*(q5-r5)", {Z, Z, Z, O, -y, Z, Z, Z, Z, -O, y, Z});
    }
  }
  if (auto ls = sb.lines(Situation::IV); !ls.empty()) {
    for (auto* g : ls) {
      const Scalar& x = g->a;
      const Scalar& y = g->b;
      sb.row(*g, "T", {y * y, x * x, Z, -(x * y), Z, Z, Z, Z, Z, Z, Z, Z});
    }
    for (auto* g : ls) {
      const Scalar& x = g->a;
      sb.row(*g, "U", {Z, Z, Z, Z, Z, Z, O, Z, x * x, Z, -x, Z});
    }
    for (auto* g : ls) {
      const Scalar& y = g->b;
      const Scalar y2 = y * y;
      sb.row(*g, "V", {Z, O, y2, Z, Z, -y, Z, -O, -y2, Z, Z, y});
    }
    for (auto* g : ls) {
      const Scalar& x = g->a;
      const Scalar& y = g->b;
      const Scalar xy2 = x * y * y;
      const Scalar y2 = y * y;
      sb.row(*g, "W", {Z, -x, xy2, y, -y2, Z, Z, Z, Scalar(-2) * xy2, -y, y2, x * y});
    }
  }
  return sb.take();
}

DerivationSystem derivation_system(const Arrangement& a, int degree) {
  if (degree == 2) return quadratic_matrix(a);
  if (degree == 3) return cubic_matrix(a);
  throw Error(ErrorKind::InvalidArgument, "specialized systems exist for degrees 2 and 3 only");
}

NormalizedDerivation reconstruct(std::span<const Scalar> coeffs, int degree) {
  const std::size_t k = degree == 2 ? 3 : degree == 3 ? 6 : 0;
  if (k == 0 || coeffs.size() != 2 * k) {
    throw Error(ErrorKind::InvalidArgument, "reconstruct needs 6 (degree 2) or 12 (degree 3) coefficients");
  }
  return NormalizedDerivation{from_display_coefficients(coeffs.subspan(0, k), degree - 1),
                              from_display_coefficients(coeffs.subspan(k, k), degree - 1)};
}

std::vector<Vector> dual_points(const Arrangement& a) {
  if (!a.has_coordinate_triangle()) {
    throw Error(ErrorKind::MissingCoordinateTriangle, "arrangement must start with x, y, z");
  }
  std::vector<Vector> out;
  for (const auto& l : a.forms()) out.push_back(l.coeffs());
  return out;
}

namespace {

HomPoly mono(int ex, int ey, int ez, const Scalar& c) {
  const int e[3] = {ex, ey, ez};
  return HomPoly::monomial(e, c);
}

}  // namespace

std::vector<HomPoly> dual_polynomials(std::span<const Scalar> c, int degree) {
  if (degree == 2) {
    if (c.size() != 6) throw Error(ErrorKind::InvalidArgument, "degree 2 needs 6 coefficients");
    const Scalar &q1 = c[0], &q2 = c[1], &q3 = c[2], &r1 = c[3], &r2 = c[4], &r3 = c[5];
    return {
        mono(1, 2, 0, q1) - mono(2, 1, 0, q2),
        mono(1, 0, 2, r1) - mono(2, 0, 1, r3),
        mono(0, 2, 1, q3 - r3) - mono(0, 1, 2, q2 - r2),
    };
  }
  if (degree == 3) {
    if (c.size() != 12) throw Error(ErrorKind::InvalidArgument, "degree 3 needs 12 coefficients");
    const Scalar &q1 = c[0], &q2 = c[1], &q3 = c[2], &q4 = c[3], &q5 = c[4], &q6 = c[5];
    const Scalar &r1 = c[6], &r2 = c[7], &r3 = c[8], &r4 = c[9], &r5 = c[10], &r6 = c[11];
    return {
        mono(3, 1, 0, q2) - mono(2, 2, 0, q4) + mono(1, 3, 0, q1),
        mono(3, 0, 1, r3) - mono(2, 0, 2, r5) + mono(1, 0, 3, r1),
        mono(0, 3, 1, q3 - r3) - mono(0, 2, 2, q6 - r6) + mono(0, 1, 3, q2 - r2),
        mono(2, 3, 1, q3 - Scalar(2) * r3) + mono(2, 2, 2, r6) - mono(2, 1, 3, q2) - mono(1, 3, 2, q5 - r5) +
            mono(1, 2, 3, q4 - r4),
    };
  }
  throw Error(ErrorKind::InvalidArgument, "dual polynomials exist for degrees 2 and 3 only");
}

bool dual_containment(const Arrangement& a, std::span<const Scalar> coeffs, int degree) {
  if (is_zero_vector(coeffs)) throw Error(ErrorKind::AllZeroCoefficients, "coefficients are all zero");
  const auto polys = dual_polynomials(coeffs, degree);
  for (const auto& p : dual_points(a)) {
    for (const auto& f : polys) {
      if (!f.evaluate(p).is_zero()) return false;
    }
  }
  return true;
}

std::vector<Vector> containment_space(const Arrangement& a, int degree) {
  const std::size_t k = degree == 2 ? 6 : degree == 3 ? 12 : 0;
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "containment exists for degrees 2 and 3 only");
  const auto points = dual_points(a);
  std::vector<std::vector<HomPoly>> unit_polys;
  for (std::size_t u = 0; u < k; ++u) {
    Vector e(k);
    e[u] = Scalar(1);
    unit_polys.push_back(dual_polynomials(e, degree));
  }
  const std::size_t npolys = unit_polys[0].size();
  Matrix m(0, k);
  for (const auto& p : points) {
    for (std::size_t f = 0; f < npolys; ++f) {
      Vector row(k);
      for (std::size_t u = 0; u < k; ++u) row[u] = unit_polys[u][f].evaluate(p);
      if (!is_zero_vector(row)) m.append_row(row);
    }
  }
  return rref_nullspace(m).basis;
}

ContainmentComparison compare_containment(const Arrangement& a, int degree) {
  const auto sys = derivation_system(a, degree);
  const auto ns = rref_nullspace(sys.matrix).basis;
  const auto cs = containment_space(a, degree);
  const std::size_t k = sys.matrix.cols();
  ContainmentComparison out;
  out.system_nullity = ns.size();
  out.containment_dim = cs.size();
  EchelonSpan cspan(k), nspan(k);
  for (const auto& v : cs) cspan.add(v);
  for (const auto& v : ns) nspan.add(v);
  out.forward = std::all_of(ns.begin(), ns.end(), [&](const Vector& v) { return cspan.contains(v); });
  out.reverse = std::all_of(cs.begin(), cs.end(), [&](const Vector& v) { return nspan.contains(v); });
  return out;
}

}  // namespace logder
