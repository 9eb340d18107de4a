#include "logder/bounds.hpp"

#include <algorithm>
#include <set>

#include "logder/algebra.hpp"
#include "logder/error.hpp"

namespace logder {

namespace {

Arrangement rank3_lines(const Arrangement& a, const char* what) {
  if (a.rank() != 3) throw Error(ErrorKind::RankTooLow, std::string(what) + " needs a rank-3 arrangement");
  return essentialize(a);
}

std::vector<Vector> points_of(const std::vector<SingularPoint>& sing) {
  std::vector<Vector> pts;
  pts.reserve(sing.size());
  for (const auto& p : sing) pts.push_back(p.point);
  return pts;
}

int alpha0_of(const std::vector<SingularPoint>& sing) {
  const auto pts = points_of(sing);
  for (int d = 1;; ++d) {
    if (vanishing_dimension(pts, d) > 0) return d;
  }
}

/// T with T e3 = x; the other columns are standard basis vectors.
Matrix point_to_e3(const Vector& x) {
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      Matrix t(3, 3);
      t(i, 0) = Scalar(1);
      t(j, 1) = Scalar(1);
      for (int k = 0; k < 3; ++k) t(k, 2) = x[k];
      if (!determinant(t).is_zero()) return t;
    }
  }
  throw Error(ErrorKind::InvalidArgument, "zero point");
}

CheckStatus implication(bool premise, bool conclusion) {
  if (!premise) return CheckStatus::Vacuous;
  return conclusion ? CheckStatus::Satisfied : CheckStatus::Violated;
}

AdditionDeletionReport check_line(const Arrangement& a, std::size_t index, int r) {
  if (index >= a.size()) throw Error(ErrorKind::NotMember, "line index out of range");
  const Arrangement del = delete_index(a, index);
  if (del.rank() < a.rank()) {
    throw Error(ErrorKind::RankCollapse, "deleting line " + std::to_string(index + 1) + " lowers the rank");
  }
  const Arrangement res = restriction(a, index);

  AdditionDeletionReport out;
  out.index = index;
  out.s = a.size();
  out.restriction_size = res.size();
  out.r = r;
  out.r_deletion = mdr(del).r;
  out.r_restriction = static_cast<int>(res.size()) - 1;
  out.r_restriction_computed = mdr(res).r;

  const int rp = out.r_deletion;
  const int rpp = out.r_restriction;
  const long s = static_cast<long>(out.s);
  const long h = static_cast<long>(out.restriction_size);
  auto add = [&](std::string name, std::string text, CheckStatus st) {
    out.checks.push_back({std::move(name), std::move(text), st});
  };
  add("1a", "r' <= r <= r'+1", implication(true, rp <= r && r <= rp + 1));
  add("1b", "|A|-|A''| > r => r' = r", implication(s - h > r, rp == r));
  add("1c", "|A'|-|A''| > r' => r = r'", implication(s - 1 - h > rp, r == rp));
  add("2", "r' < r'' => r = r'+1", implication(rp < rpp, r == rp + 1));
  add("3", "r = r' => r'' <= r", implication(r == rp, rpp <= r));
  if (a.rank() == 3) {
    add("i", "|H| >= r'+2 => r = r'+1", implication(h >= rp + 2, r == rp + 1));
    add("ii", "|H| >= r+2 => r' = r-1", implication(h >= r + 2, rp == r - 1));
  }
  return out;
}

}  // namespace

int alpha0(const Arrangement& a) {
  return alpha0_of(singular_locus(rank3_lines(a, "alpha0")));
}

CoatomSyzygy coatom_syzygy(const Arrangement& a, const SingularPoint& x) {
  if (a.nvars() != 3) throw Error(ErrorKind::InvalidArgument, "coatom syzygy needs 3 variables");
  const auto sing = singular_locus(a);
  const auto it = std::find_if(sing.begin(), sing.end(), [&](const SingularPoint& p) { return p.point == x.point; });
  if (it == sing.end()) throw Error(ErrorKind::NotMember, "not a singular point of the arrangement");
  const std::size_t s = a.size();
  if (it->multiplicity + 2 > s) {
    throw Error(ErrorKind::PencilLike, "multiplicity " + std::to_string(it->multiplicity) + " exceeds s-2 = " +
                                           std::to_string(static_cast<long>(s) - 2));
  }

  CoatomSyzygy out;
  out.point = *it;
  out.transform = point_to_e3(it->point);
  out.moved = change_coordinates(a, out.transform);
  out.g = HomPoly::constant(3, Scalar(1));
  out.h = HomPoly::constant(3, Scalar(1));
  for (const auto& l : out.moved.forms()) {
    if (l[2].is_zero()) {
      out.g = out.g * l.to_poly();
    } else {
      out.h = out.h * l.to_poly();
    }
  }
  if (static_cast<std::size_t>(out.g.degree()) != it->multiplicity) {
    throw std::logic_error("coatom syzygy: moved point is not [0,0,1]");
  }
  const HomPoly hz = out.h.partial(2);
  out.syzygy = {HomPoly::variable(3, 0) * hz, HomPoly::variable(3, 1) * hz,
                HomPoly::variable(3, 2) * hz - out.h * Scalar(static_cast<long>(s))};
  out.degree = out.h.degree();
  out.derivation = Derivation(out.syzygy);

  const HomPoly f = out.moved.defining_polynomial();
  HomPoly contraction(3, f.degree() + out.degree - 1);
  for (int i = 0; i < 3; ++i) contraction += out.syzygy[static_cast<std::size_t>(i)] * f.partial(i);
  out.contraction_zero = contraction.is_zero();
  out.logarithmic = is_logarithmic(out.moved, out.derivation);
  out.euler_multiple = is_euler_multiple(out.derivation);
  return out;
}

CoatomSyzygy coatom_syzygy(const Arrangement& a) {
  if (a.nvars() != 3) throw Error(ErrorKind::InvalidArgument, "coatom syzygy needs 3 variables");
  const auto sing = singular_locus(a);
  if (sing.empty()) throw Error(ErrorKind::RankTooLow, "no singular points");
  const auto best = std::max_element(sing.begin(), sing.end(), [](const SingularPoint& p, const SingularPoint& q) {
    return p.multiplicity < q.multiplicity;
  });
  return coatom_syzygy(a, *best);
}

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Satisfied: return "satisfied";
    case CheckStatus::Vacuous: return "vacuous";
    case CheckStatus::Violated: return "violated";
  }
  return "?";
}

bool BoundsReport::ok() const {
  const bool syz_ok = !syzygy || (syzygy->ok() && upper && syzygy->degree == *upper);
  return lower_ok() && upper_ok() && dichotomy.holds() && counts_ok && syz_ok;
}

BoundsReport bounds_report(const Arrangement& input) {
  const Arrangement a = rank3_lines(input, "bounds_report");
  const auto sing = singular_locus(a);
  const ArrangementStats st = stats(a, sing);

  BoundsReport out;
  out.s = st.s;
  out.m = st.m;
  out.M = st.M;
  out.alpha0 = alpha0_of(sing);
  out.lower = out.alpha0 - 1;
  out.r = mdr(a).r;
  if (out.M + 2 <= out.s) {
    out.upper = static_cast<int>(out.s - out.M);
    out.syzygy = coatom_syzygy(a);
  }
  out.dichotomy.min_points = std::min_element(st.lines.begin(), st.lines.end(), [](const LineStats& p, const LineStats& q) {
                               return p.points < q.points;
                             })->points;
  out.dichotomy.equals_s_minus_m = static_cast<long>(out.r) == static_cast<long>(out.s) - static_cast<long>(out.m);
  out.dichotomy.above_min_points = static_cast<long>(out.r) >= static_cast<long>(out.dichotomy.min_points) - 1;
  if (out.m <= 3) out.dt_bound = 2L * out.r >= static_cast<long>(out.s) - 2;
  out.counts_ok = check_count_formulas(a).ok();
  return out;
}

Arrangement restriction(const Arrangement& a, std::size_t index) {
  if (index >= a.size()) throw Error(ErrorKind::NotMember, "line index out of range");
  const LinearForm& h = a[index];
  std::set<LinearForm> seen;
  std::vector<LinearForm> forms;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i == index) continue;
    const HomPoly rem = divide_by_linear(a[i].to_poly(), h).remainder;
    if (rem.is_zero()) throw std::logic_error("restriction: proportional forms in an arrangement");
    LinearForm l(rem.coeffs());
    if (seen.insert(l).second) forms.push_back(std::move(l));
  }
  return Arrangement(std::move(forms));
}

bool AdditionDeletionReport::ok() const {
  return r_restriction == r_restriction_computed &&
         std::none_of(checks.begin(), checks.end(), [](const Implication& c) { return c.status == CheckStatus::Violated; });
}

AdditionDeletionReport addition_deletion_check(const Arrangement& a, std::size_t index) {
  if (a.rank() < 3) throw Error(ErrorKind::RankTooLow, "addition-deletion needs rank >= 3");
  return check_line(a, index, mdr(a).r);
}

bool AdditionDeletionSweep::ok() const {
  return std::all_of(reports.begin(), reports.end(), [](const AdditionDeletionReport& r) { return r.ok(); });
}

AdditionDeletionSweep addition_deletion_all(const Arrangement& a) {
  if (a.rank() < 3) throw Error(ErrorKind::RankTooLow, "addition-deletion needs rank >= 3");
  AdditionDeletionSweep out;
  out.r = mdr(a).r;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (delete_index(a, i).rank() < a.rank()) {
      out.collapsed.push_back(i);
      continue;
    }
    out.reports.push_back(check_line(a, i, out.r));
  }
  return out;
}

}  // namespace logder
