// One line per acceptance criterion; exit status 1 when any criterion fails.

#include <functional>
#include <iostream>
#include <random>

#include "logder/algebra.hpp"
#include "logder/papermat.hpp"
#include "logder/sweep.hpp"
#include "displayed_matrices.hpp"
#include "support.hpp"

using namespace logder;
using logder::test::fixture;
using logder::test::ints;

namespace {

/// Collects failures of one criterion.
class Ledger {
 public:
  void require(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  std::size_t checks() const { return checks_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
};

// Every line arrangement built below, for the count-formula criterion.
std::vector<Arrangement> g_built;

Arrangement keep(Arrangement a) {
  g_built.push_back(a);
  return a;
}

std::vector<Arrangement> all_fixtures() {
  std::vector<Arrangement> out;
  for (const auto& name : logder::test::fixture_names()) out.push_back(keep(fixture(name)));
  return out;
}

std::vector<Arrangement> random_triangle_arrangements(std::uint64_t seed, std::size_t count) {
  std::vector<Arrangement> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::mt19937_64 rng(seed + i);
    out.push_back(keep(random_arrangement(rng)));
  }
  return out;
}

bool same_exponents(const SaitoCertificate& c, std::vector<int> e) { return c.success && c.sorted_exponents() == e; }

void criterion1(Ledger& L) {
  const auto a1 = keep(fixture("ziegler1.arr")), a2 = keep(fixture("ziegler2.arr"));
  const auto b1 = bounds_report(a1), b2 = bounds_report(a2);
  L.require(mdr(a1).r == 6, "mdr(A1) = 6");
  L.require(mdr(a2).r == 5, "mdr(A2) = 5");
  for (const auto* b : {&b1, &b2}) {
    L.require(b->lower == 5, "lower = 5");
    L.require(b->upper && *b->upper == 6, "upper = 6");
  }
  L.require(b1.upper && b1.r == *b1.upper, "A1 on the upper branch");
  L.require(b2.r == b2.lower, "A2 on the lower branch");
}

void criterion2(Ledger& L) { L.require(mdr(keep(fixture("deleted-hesse.arr"))).r == 4, "deleted Hesse mdr = 4"); }

void criterion3(Ledger& L) {
  const auto nf = keep(fixture("non-fano.arr"));
  L.require(mdr(nf).r == 3, "non-Fano mdr = 3");
  L.require(same_exponents(auto_saito(nf), {1, 3, 3}), "non-Fano exponents (1,3,3)");
  L.require(same_exponents(auto_saito(keep(fixture("b1.arr"))), {1, 3, 3}), "B1 exponents (1,3,3)");
  const auto b2 = keep(fixture("b2.arr"));
  L.require(mdr(b2).r == 5, "B2 mdr = 5");
  const auto d3 = derlog_basis(b2, 3);
  L.require(d3.dimension == euler_dim(3, 3), "B2 dim Derlog_3 = euler_dim");
}

void criterion4(Ledger& L) {
  bool two_dim_seen = false;
  for (FamilyId id : all_families()) {
    const auto instances = family_instances(id, 9);
    for (const auto& inst : instances) keep(inst.arrangement);
    const auto res = family_sweep(instances, true);
    const std::string name(to_string(id));
    L.require(res.errors.empty(), name + ": no errors");
    if (is_quadratic(id)) {
      L.require(!res.reports.empty() && res.passing() == res.reports.size(), name + ": every instance mdr 2 with derivation");
      for (const auto& r : res.reports) two_dim_seen |= (id == FamilyId::I && r.quotient_dim == 2 && r.ok());
    } else {
      std::size_t exact = 0;
      for (const auto& r : res.reports) exact += (r.r == 3 && r.ok()) ? 1 : 0;
      L.require(exact >= 3, name + ": at least 3 instances with mdr 3");
    }
  }
  L.require(two_dim_seen, "type I s = 4 two-dimensional case");
}

void oracle(Ledger& L, const Arrangement& arr, const std::string& label) {
  const auto a = logder::test::with_coordinate_triangle(arr);
  for (int degree : {2, 3}) {
    const auto sys = derivation_system(a, degree);
    const auto ns = rref_nullspace(sys.matrix);
    const auto b = derlog_basis(a, degree);
    L.require(ns.basis.size() == b.dimension - b.euler_dim, label + ": nullity at degree " + std::to_string(degree));
    for (const auto& v : ns.basis) {
      L.require(is_logarithmic(a, reconstruct(v, degree).reconstruct()), label + ": reconstruction logarithmic");
    }
  }
}

void criterion5(Ledger& L) {
  const auto names = logder::test::fixture_names();
  const auto fx = all_fixtures();
  for (std::size_t i = 0; i < fx.size(); ++i) oracle(L, fx[i], names[i]);
  const auto rnd = random_triangle_arrangements(5000, 20);
  for (std::size_t i = 0; i < rnd.size(); ++i) oracle(L, rnd[i], "random " + std::to_string(i));
}

void criterion6(Ledger& L) {
  using logder::test::row_list;
  const auto iii = quadratic_matrix(keep(fixture("fam-III.arr")));
  L.require(iii.matrix == logder::test::kMIII, "M_III rows");
  const auto iii_ns = rref_nullspace(iii.matrix);
  L.require(iii_ns.basis == std::vector<Vector>{ints({1, 1, 2, 1, 0, 1})}, "M_III nullspace");

  for (const std::vector<long>& t : {std::vector<long>{2, 3}, std::vector<long>{2}}) {
    FamilyParams p;
    p.s = static_cast<int>(t.size()) + 3;
    for (long tj : t) p.t.emplace_back(tj);
    const auto sys = quadratic_matrix(keep(family(FamilyId::I, p)));
    const std::string label = "M_I s=" + std::to_string(p.s);
    L.require(sys.matrix == logder::test::m_i(t), label + " rows");
    const auto ns = rref_nullspace(sys.matrix);
    if (t.size() == 2) {
      L.require(ns.basis == std::vector<Vector>{ints({1, 1, 0, 1, 1, 0})}, label + " nullspace");
    } else {
      EchelonSpan span(6);
      for (const auto& v : ns.basis) span.add(v);
      L.require(ns.basis.size() == 2 && span.contains(ints({1, 1, 0, 1, 1, 0})), label + " nullspace");
    }
  }

  const auto vb = cubic_matrix(keep(fixture("vb-displayed.arr")));
  const auto built = row_list(vb.matrix), shown = row_list(logder::test::kMVb);
  L.require(built.size() == 13, "Vb 13 rows");
  for (std::size_t r = 0; r < 11 && r < built.size(); ++r) L.require(built[r] == shown[r], "Vb row " + std::to_string(r + 1));
  L.require(built.size() == 13 && built[11] == ints({0, 0, 0, 1, -1, 0, 0, 0, 0, -1, 1, 0}) &&
                built[12] == ints({0, 0, 0, 1, 1, 0, 0, 0, 0, -1, -1, 0}),
            "Vb rows 12-13 by the situation iii relation");
  L.require(rref(vb.matrix).reduced == rref(logder::test::kMVb).reduced, "Vb row space equals the displayed one");
  L.require(rref_nullspace(vb.matrix).basis == std::vector<Vector>{ints({-1, 1, 0, 0, 0, 0, -1, 0, 1, 0, 0, 0})},
            "Vb nullspace");
}

void criterion7(Ledger& L) {
  const auto vb = fixture("vb-displayed.arr");
  L.require(dual_points(vb).size() == 8, "Vb has 8 dual points");
  L.require(dual_containment(vb, ints({-1, 1, 0, 0, 0, 0, -1, 0, 1, 0, 0, 0}), 3), "Vb cubic containment");
  L.require(dual_containment(fixture("fam-III.arr"), ints({1, 1, 2, 1, 0, 1}), 2), "III quadratic containment");
  const auto a1 = dual_points(fixture("ziegler1.arr"));
  L.require(vanishing_dimension(a1, 3) == 2, "A1 dual points: 2 cubics");
  L.require(vanishing_dimension(dual_points(fixture("b1.arr")), 2) == 1, "B1 dual points: 1 conic");
  L.require(vanishing_dimension(dual_points(fixture("b2.arr")), 2) == 1, "B2 dual points: 1 conic");
}

void bounds_item(Ledger& L, const BoundsSweepItem& it, const std::string& label) {
  L.require(it.error.empty(), label + ": " + it.error);
  if (!it.error.empty()) return;
  const auto& b = it.bounds;
  L.require(b.lower_ok(), label + ": alpha0 - 1 <= r");
  L.require(b.upper_ok(), label + ": r <= s - M");
  L.require(b.dichotomy.holds(), label + ": dichotomy");
  if (b.syzygy) {
    L.require(b.syzygy->contraction_zero, label + ": coatom syzygy contracts to zero");
    L.require(b.syzygy->degree == static_cast<int>(b.s - b.M), label + ": coatom syzygy degree s - M");
  } else {
    L.require(b.M + 2 > b.s, label + ": syzygy present when M <= s - 2");
  }
  L.require(it.addition_deletion.ok(), label + ": addition-deletion");
}

void criterion8(Ledger& L) {
  const auto names = logder::test::fixture_names();
  const auto fx = bounds_sweep(all_fixtures(), true);
  for (std::size_t i = 0; i < fx.size(); ++i) bounds_item(L, fx[i], names[i]);
  const auto rnd = random_bounds_sweep(8000, 50, {}, true);
  for (const auto& it : rnd.items) {
    keep(it.arrangement);
    bounds_item(L, it, "seed " + std::to_string(it.seed));
  }
}

void criterion9(Ledger& L) {
  const auto ex = graph_exhaustion(5, true);
  L.require(ex.ok(), "graph exhaustion: " + std::to_string(ex.agree) + "/" + std::to_string(ex.graphs));
  for (int n = 4; n <= 5; ++n) {
    for (const auto& g : enumerate_graphs(n)) {
      const auto a = graphic_arrangement(g);
      if (a.rank() == 3) keep(essentialize(a));
    }
  }
  L.require(squares_sweep(9000, 100, 6, 0.5, true).ok(), "squares derivation on 100 random graphs");
  L.require(mdr_graph(parse_edge_list("1-2,2-3,1-3")).r == 2, "K3 -> 2");
  L.require(mdr_graph(parse_edge_list("1-2,2-3")).r == 1, "path -> 1");
  L.require(mdr_graph(parse_edge_list("1-2,2-3,1-3,3-4,4-5,3-5")).r == 1, "bowtie -> 1");
}

void criterion10(Ledger& L) {
  std::size_t checked = 0;
  for (const auto& a : g_built) {
    if (a.nvars() != 3 || a.rank() < 2) continue;
    const auto rep = check_count_formulas(a);
    L.require(rep.ok(), "count formulas on " + format_arrangement(a));
    ++checked;
  }
  L.require(checked > 100, "at least 100 arrangements checked");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Ledger&)>>> criteria{
      {"Ziegler pair mdr and bounds", criterion1},
      {"deleted Hesse mdr", criterion2},
      {"non-Fano, B1, B2 freeness and mdr", criterion3},
      {"classification sweep", criterion4},
      {"specialized-matrix oracle equivalence", criterion5},
      {"displayed-matrix goldens", criterion6},
      {"dual-point checks", criterion7},
      {"bounds and addition-deletion properties", criterion8},
      {"graphic arrangements", criterion9},
      {"combinatorial count formulas", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Ledger L;
    try {
      criteria[i].second(L);
    } catch (const std::exception& e) {
      L.require(false, std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << (i + 1) << ": " << (L.ok() ? "PASS" : "FAIL") << "  " << criteria[i].first << " ("
              << L.checks() << " checks)\n";
    for (const auto& f : L.failures()) std::cout << "    failed: " << f << "\n";
    failed += L.ok() ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
