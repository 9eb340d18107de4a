#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "logder/catalog.hpp"
#include "logder/papermat.hpp"
#include "logder/random.hpp"
#include "displayed_matrices.hpp"
#include "support.hpp"

using namespace logder;
using logder::test::error_kind;
using logder::test::fixture;
using logder::test::ints;
using logder::test::kMIII;
using logder::test::kMVb;
using logder::test::m_i;
using logder::test::row_list;

namespace {

Arrangement type_i(const std::vector<long>& t) {
  FamilyParams p;
  p.s = static_cast<int>(t.size()) + 3;
  for (long tj : t) p.t.emplace_back(tj);
  return family(FamilyId::I, p);
}

void check_oracle(const Arrangement& arr) {
  const auto a = logder::test::with_coordinate_triangle(arr);
  for (int degree : {2, 3}) {
    const auto sys = derivation_system(a, degree);
    const auto ns = rref_nullspace(sys.matrix);
    const auto basis = derlog_basis(a, degree);
    CHECK(ns.basis.size() == basis.dimension - basis.euler_dim);
    for (const auto& v : ns.basis) CHECK(is_logarithmic(a, reconstruct(v, degree).reconstruct()));
  }
}

}  // namespace

TEST_CASE("line grouping by situation") {
  const auto g = group_lines(fixture("vb-displayed.arr"));
  CHECK(g.s == 8);
  CHECK(g.j == 4);
  CHECK(g.l == 6);
  CHECK(g.n == 8);
  CHECK(g.count(Situation::I) == 1);
  CHECK(g.count(Situation::II) == 2);
  CHECK(g.count(Situation::III) == 2);
  CHECK(g.count(Situation::IV) == 0);
  CHECK(error_kind([] { (void)group_lines(fixture("deleted-hesse.arr")); }) == ErrorKind::MissingCoordinateTriangle);
}

TEST_CASE("M_III golden") {
  const auto sys = quadratic_matrix(fixture("fam-III.arr"));
  CHECK(sys.matrix == kMIII);
  CHECK(sys.matrix.rows() == 7);
  CHECK(sys.formula_rows() == 8);  // situation i is empty, so the closed-form count overshoots
  const auto ns = rref_nullspace(sys.matrix);
  REQUIRE(ns.basis.size() == 1);
  CHECK(ns.basis[0] == ints({1, 1, 2, 1, 0, 1}));
  CHECK(sys.column_names() == std::vector<std::string>{"q1", "q2", "q3", "r1", "r2", "r3"});
}

TEST_CASE("M_I golden, s = 5") {
  const auto sys = quadratic_matrix(type_i({2, 3}));
  CHECK(sys.matrix == m_i({2, 3}));
  const auto ns = rref_nullspace(sys.matrix);
  REQUIRE(ns.basis.size() == 1);
  CHECK(ns.basis[0] == ints({1, 1, 0, 1, 1, 0}));
}

TEST_CASE("M_I golden, s = 4") {
  const auto sys = quadratic_matrix(type_i({2}));
  CHECK(sys.matrix == m_i({2}));
  CHECK(sys.matrix.rows() == 4);
  const auto ns = rref_nullspace(sys.matrix);
  CHECK(ns.basis.size() == 2);
  EchelonSpan span(6);
  for (const auto& v : ns.basis) span.add(v);
  CHECK(span.contains(ints({1, 1, 0, 1, 1, 0})));
}

TEST_CASE("Vb golden") {
  const auto sys = cubic_matrix(fixture("vb-displayed.arr"));
  REQUIRE(sys.matrix.rows() == 13);
  CHECK(sys.formula_rows() == 13);
  const auto built = row_list(sys.matrix);
  const auto shown = row_list(kMVb);
  for (std::size_t r = 0; r < 11; ++r) CHECK(built[r] == shown[r]);
  // Rows 12-13: (q4 - r4) - b (q5 - r5) for y + z (b = 1) and -y + z (b = -1).
  CHECK(built[11] == ints({0, 0, 0, 1, -1, 0, 0, 0, 0, -1, 1, 0}));
  CHECK(built[12] == ints({0, 0, 0, 1, 1, 0, 0, 0, 0, -1, -1, 0}));
  CHECK(rref(sys.matrix).reduced == rref(kMVb).reduced);
  const auto ns = rref_nullspace(sys.matrix);
  CHECK(ns.rank == 11);
  REQUIRE(ns.basis.size() == 1);
  CHECK(ns.basis[0] == ints({-1, 1, 0, 0, 0, 0, -1, 0, 1, 0, 0, 0}));
  const auto theta = reconstruct(ns.basis[0], 3).reconstruct();
  CHECK(is_logarithmic(fixture("vb-displayed.arr"), theta));
}

TEST_CASE("row provenance") {
  const auto sys = cubic_matrix(fixture("vb-displayed.arr"));
  REQUIRE(sys.rows.size() == 13);
  CHECK(sys.rows[0].header);
  CHECK(sys.rows[0].relation == "q3");
  CHECK(sys.rows[1].line == 3);
  CHECK(sys.rows[12].situation == Situation::III);
}

TEST_CASE("situation iv rows") {
  // Two lines with all coefficients nonzero.
  const auto a = logder::test::lines({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 2, 3}, {1, -1, 2}, {1, 1, 1}});
  CHECK(quadratic_matrix(a).matrix.rows() == 9);
  CHECK(cubic_matrix(a).matrix.rows() == 12);
  check_oracle(a);
}

TEST_CASE("oracle equivalence on fixtures") {
  for (const auto& name : logder::test::fixture_names()) {
    CAPTURE(name);
    check_oracle(fixture(name));
  }
}

TEST_CASE("property: oracle equivalence on random arrangements") {
  std::mt19937_64 rng(31337);
  for (int i = 0; i < 10; ++i) check_oracle(random_arrangement(rng));
}

TEST_CASE("dual points") {
  const auto pts = dual_points(fixture("vb-displayed.arr"));
  REQUIRE(pts.size() == 8);
  CHECK(pts[0] == ints({1, 0, 0}));
  CHECK(pts[3] == ints({1, 1, 0}));
}

TEST_CASE("dual containment for the displayed vectors") {
  CHECK(dual_containment(fixture("vb-displayed.arr"), ints({-1, 1, 0, 0, 0, 0, -1, 0, 1, 0, 0, 0}), 3));
  CHECK(dual_containment(fixture("fam-III.arr"), ints({1, 1, 2, 1, 0, 1}), 2));
  CHECK_FALSE(dual_containment(fixture("fam-III.arr"), ints({1, 0, 0, 0, 0, 0}), 2));
  CHECK(error_kind([] { (void)dual_containment(fixture("fam-III.arr"), ints({0, 0, 0, 0, 0, 0}), 2); }) ==
        ErrorKind::AllZeroCoefficients);
  CHECK(dual_polynomials(ints({1, 1, 2, 1, 0, 1}), 2).size() == 3);
  CHECK(dual_polynomials(ints({-1, 1, 0, 0, 0, 0, -1, 0, 1, 0, 0, 0}), 3).size() == 4);
}

TEST_CASE("system solutions satisfy the dual containment") {
  for (const char* name : {"fam-III.arr", "fam-I.arr", "vb-displayed.arr", "fam-IIIc.arr", "b1.arr"}) {
    CAPTURE(name);
    for (int degree : {2, 3}) {
      const auto cmp = compare_containment(fixture(name), degree);
      CHECK(cmp.forward);
      CHECK(cmp.containment_dim >= cmp.system_nullity);
    }
  }
}
