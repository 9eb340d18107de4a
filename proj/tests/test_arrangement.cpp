#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "logder/random.hpp"
#include "support.hpp"

using namespace logder;
using logder::test::error_kind;
using logder::test::fixture;
using logder::test::ints;
using logder::test::lines;

namespace {

// xyz(x-y)(x-z)(y-z)
Arrangement braid() { return lines({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, -1, 0}, {1, 0, -1}, {0, 1, -1}}); }

}  // namespace

TEST_CASE("construction normalizes and rejects bad input") {
  const auto a = lines({{2, 0, 0}, {0, -3, 3}});
  CHECK(a[0].coeffs() == ints({1, 0, 0}));
  CHECK(a[1].coeffs() == ints({0, 1, -1}));
  CHECK(a.rank() == 2);
  CHECK(error_kind([] { (void)lines({{1, 0, 0}, {2, 0, 0}}); }) == ErrorKind::DuplicateHyperplane);
  CHECK(error_kind([] { (void)lines({{0, 0, 0}}); }) == ErrorKind::ZeroForm);
  CHECK(error_kind([] { (void)Arrangement(std::vector<LinearForm>{}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("braid arrangement singular locus") {
  const auto a = braid();
  const auto sing = singular_locus(a);
  const auto st = stats(a, sing);
  CHECK(st.s == 6);
  CHECK(st.rank == 3);
  CHECK(st.m == 3);
  CHECK(st.n2 == 3);
  CHECK(st.n3 == 4);
  CHECK(st.multiplicities == std::vector<std::size_t>{3, 3, 3, 3, 2, 2, 2});
  for (const auto& l : st.lines) {
    CHECK(l.points == 3);
    CHECK(l.doubles == 1);
    CHECK(l.triples == 2);
  }
  CHECK(check_count_formulas(a).ok());
  CHECK(modular_points(a).size() == 4);
  CHECK(a.defining_polynomial().degree() == 6);
}

TEST_CASE("singular points carry their incident lines") {
  for (const auto& p : singular_locus(braid())) {
    CHECK(p.incident.size() == p.multiplicity);
    for (std::size_t i : p.incident) CHECK(braid()[i].evaluate(p.point).is_zero());
  }
}

TEST_CASE("deletion and addition") {
  const auto a = braid();
  const auto d = delete_index(a, 5);
  CHECK(d.size() == 5);
  CHECK(add_form(d, a[5]) == a);
  CHECK(delete_form(a, a[5]) == d);
  CHECK(error_kind([&] { (void)add_form(a, a[0]); }) == ErrorKind::DuplicateHyperplane);
  CHECK(error_kind([&] { (void)delete_form(d, a[5]); }) == ErrorKind::NotMember);
  CHECK(a.require_index(a[3]) == 3);
}

TEST_CASE("coordinate changes preserve the combinatorics") {
  const auto a = fixture("ziegler1.arr");
  const Matrix t{{1, 1, 0}, {0, 1, 1}, {1, 0, 2}};
  const auto b = change_coordinates(a, t);
  CHECK(stats(b).multiplicities == stats(a).multiplicities);
  CHECK(change_coordinates(b, inverse(t)) == a);
  CHECK(error_kind([&] { (void)change_coordinates(a, Matrix{{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}); }) ==
        ErrorKind::SingularTransform);
}

TEST_CASE("move_to_coordinate_triangle") {
  const auto a = fixture("deleted-hesse.arr");
  const auto b = logder::test::with_coordinate_triangle(a);
  CHECK(b.has_coordinate_triangle());
  CHECK(b.size() == a.size());
  CHECK(stats(b).multiplicities == stats(a).multiplicities);
}

TEST_CASE("essentialize drops the lineality space") {
  // x1 - x2, x2 - x3, x1 - x3 in four variables: rank 2.
  const auto a = new_arrangement({ints({1, -1, 0, 0}), ints({0, 1, -1, 0}), ints({1, 0, -1, 0})});
  const auto e = essentialize(a);
  CHECK(e.nvars() == 2);
  CHECK(e.size() == 3);
  CHECK(essentialize(braid()) == braid());
}

TEST_CASE("deleted Hesse lives over Q(w)") {
  const auto a = fixture("deleted-hesse.arr");
  CHECK(a.size() == 8);
  CHECK(a.rank() == 3);
  const auto st = stats(a);
  CHECK(st.m == 3);
  CHECK(check_count_formulas(a).ok());
}

TEST_CASE("property: count formulas on random arrangements") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 40; ++i) {
    const auto a = random_arrangement(rng);
    const auto rep = check_count_formulas(a);
    CHECK(rep.ok());
    CHECK(rep.global_residual == 0);
    for (long r : rep.line_residuals) CHECK(r == 0);
  }
}

TEST_CASE("singular locus preconditions") {
  CHECK(error_kind([] { (void)singular_locus(lines({{1, 0, 0}})); }) == ErrorKind::RankTooLow);
  const auto four = new_arrangement({ints({1, 0, 0, 0}), ints({0, 1, 0, 0})});
  CHECK(error_kind([&] { (void)singular_locus(four); }) == ErrorKind::InvalidArgument);
}
