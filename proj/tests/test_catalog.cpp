#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "logder/catalog.hpp"
#include "support.hpp"

using namespace logder;
using logder::test::error_kind;
using logder::test::ints;

namespace {

HomPoly lin(long a, long b, long c) { return HomPoly::linear(ints({a, b, c})); }

Vector lin_coeffs(const HomPoly& p) { return display_coefficients(p); }

bool proportional(const Vector& u, const Vector& v) {
  return (u[1] * v[2] - u[2] * v[1]).is_zero() && (u[2] * v[0] - u[0] * v[2]).is_zero() &&
         (u[0] * v[1] - u[1] * v[0]).is_zero();
}

Derivation only_z(const HomPoly& p) { return Derivation({HomPoly(3, 3), HomPoly(3, 3), p}); }
Derivation only_y(const HomPoly& p) { return Derivation({HomPoly(3, 3), p, HomPoly(3, 3)}); }

}  // namespace

TEST_CASE("family names") {
  CHECK(all_families().size() == 15);
  for (FamilyId id : all_families()) CHECK(parse_family(to_string(id)) == id);
  CHECK(error_kind([] { (void)parse_family("VI"); }) == ErrorKind::InvalidParams);
  CHECK(is_quadratic(FamilyId::III));
  CHECK_FALSE(is_quadratic(FamilyId::Ia));
  CHECK(expected_mdr(FamilyId::II) == 2);
  CHECK(expected_mdr(FamilyId::Vb) == 3);
}

TEST_CASE("every family's default instance has the expected mdr") {
  for (FamilyId id : all_families()) {
    CAPTURE(to_string(id));
    const auto rep = verify_family(id, default_params(id));
    CHECK(rep.r == expected_mdr(id));
    CHECK(rep.derivation_ok);
    CHECK(rep.ok());
  }
}

TEST_CASE("line counts follow the family conventions") {
  FamilyParams p;
  p.s = 5;
  p.t = {Scalar(2), Scalar(3)};
  CHECK(family(FamilyId::I, p).size() == 6);  // I and II list s + 1 lines
  CHECK(family(FamilyId::Vb, default_params(FamilyId::Vb)).size() == 8);
  CHECK(family(FamilyId::Va, default_params(FamilyId::Va)).size() == 9);
  CHECK(golden_profile(FamilyId::Vb, 8).has_value());
  CHECK_FALSE(golden_profile(FamilyId::Vb, 12).has_value());
}

TEST_CASE("invalid parameters") {
  FamilyParams p;
  p.s = 5;
  p.t = {Scalar(1), Scalar(1)};  // repeated line
  CHECK(error_kind([&] { (void)family(FamilyId::I, p); }) == ErrorKind::InvalidParams);
  p.t = {Scalar(2)};  // wrong count
  CHECK(error_kind([&] { (void)family(FamilyId::I, p); }) == ErrorKind::InvalidParams);
  CHECK(error_kind([] { (void)expected_quadratic_derivation(FamilyId::Ia, default_params(FamilyId::Ia)); }) ==
        ErrorKind::WrongFamily);
}

TEST_CASE("quadratic closed forms, including the two-dimensional case") {
  FamilyParams p;
  p.s = 4;
  p.t = {Scalar(2)};
  const auto ds = expected_quadratic_derivation(FamilyId::I, p);
  CHECK(ds.size() == 2);
  const auto rep = verify_family(FamilyId::I, p);
  CHECK(rep.quotient_dim == 2);
  CHECK(rep.ok());
  p.s = 5;
  p.t = {Scalar(2), Scalar(3)};
  CHECK(expected_quadratic_derivation(FamilyId::I, p).size() == 1);
  CHECK(verify_family(FamilyId::I, p).quotient_dim == 1);
}

TEST_CASE("pinned: Id at five lines is projectively type II") {
  // xyz(x+y)(2x+3y+z)
  const auto a = logder::test::lines({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {2, 3, 1}});
  FamilyParams p;
  p.s = 5;
  p.a = Scalar(2);
  p.b = Scalar(3);
  CHECK(error_kind([&] { (void)family_unchecked(FamilyId::Id, p); }) == ErrorKind::InvalidParams);
  CHECK(a.size() == 5);
  CHECK(mdr(a).r == 2);
}

TEST_CASE("pinned: type II with an empty product is four generic lines") {
  // xyz(x+y+z)
  const auto a = logder::test::lines({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
  FamilyParams p;
  p.s = 3;
  CHECK(error_kind([&] { (void)family_unchecked(FamilyId::II, p); }) == ErrorKind::InvalidParams);
  CHECK(a.size() == 4);
  const auto res = mdr(a);
  CHECK(res.r == 2);
  CHECK(res.quotient_basis.size() == 3);
}

TEST_CASE("parameter grids") {
  for (FamilyId id : all_families()) {
    CAPTURE(to_string(id));
    const auto grid = parameter_grid(id, 9);
    CHECK_FALSE(grid.empty());
    for (const auto& p : grid) CHECK(family(id, p).size() > 0);
  }
}

TEST_CASE("base and added line") {
  const auto p = default_params(FamilyId::Ic);
  const auto [base, l] = base_and_added_line(FamilyId::Ic, p);
  CHECK(add_form(base, l).size() == family(FamilyId::Ic, p).size());
  CHECK(mdr(base).r == 2);
  CHECK(l.coeffs() == ints({1, 0, -1}));
}

TEST_CASE("decomposition for type I bases") {
  const long t = 3;
  const auto base = logder::test::lines({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}, {0, t, 1}});
  const NormalizedDerivation r2{lin(1, 1, 0), lin(1, 1, 0)};
  const Derivation rho3 = only_z(lin(0, t, 1) * lin(0, 1, 1) * lin(0, 0, 1));
  const DecompositionHints hints{std::vector<Derivation>{r2.reconstruct()}, std::vector<Derivation>{rho3}};

  SUBCASE("Ic: l' = x - t y - 2z modulo l") {
    const LinearForm l(ints({-1, 0, 1}));
    const auto res = mdr(add_form(base, l));
    REQUIRE(res.r == 3);
    bool mixed_seen = false;
    for (const auto& theta : res.quotient_basis) {
      const auto d = cubic_shape_decomposition(base, l, theta, hints);
      CHECK(d.reconstructed_logarithmic);
      CHECK(d.hypothesis);
      if (d.pure) continue;
      mixed_seen = true;
      REQUIRE(d.lprime.size() == 1);
      Vector diff = lin_coeffs(d.lprime[0] - lin(1, -t, -2));
      CHECK(proportional(diff, l.coeffs()));
    }
    CHECK(mixed_seen);
  }

  SUBCASE("Ia: l' = l gives a pure multiple") {
    const LinearForm l(ints({2, 1, 0}));
    const auto res = mdr(add_form(base, l));
    REQUIRE(res.r == 3);
    const auto d = cubic_shape_decomposition(base, l, res.witness, hints);
    CHECK(d.reconstructed_logarithmic);
  }
}

TEST_CASE("decomposition for the type II base: IIb has alpha = 0") {
  const long t = 3, a = 5;
  const auto base = logder::test::lines({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {0, t, 1}});
  const NormalizedDerivation r2{lin(1, 1, 1), lin(1, 1, 1)};
  const HomPoly w = lin(0, t, 1) * lin(1, 1, 1);
  const std::vector<Derivation> rho3{only_y(w * lin(0, 1, 0)), only_z(w * lin(0, 0, 1))};
  const DecompositionHints hints{std::vector<Derivation>{r2.reconstruct()}, rho3};
  const LinearForm l(ints({a, 1, 0}));
  const auto res = mdr(add_form(base, l));
  REQUIRE(res.r == 3);
  bool mixed_seen = false;
  for (const auto& theta : res.quotient_basis) {
    const auto d = cubic_shape_decomposition(base, l, theta, hints);
    CHECK(d.reconstructed_logarithmic);
    if (d.pure) continue;
    mixed_seen = true;
    REQUIRE(d.rho3_coeffs.size() == 2);
    CHECK(d.rho3_coeffs[0] == Scalar(0));
    CHECK(d.rho3_coeffs[1] == Scalar(1));
    REQUIRE(d.lprime.size() == 1);
    CHECK(proportional(lin_coeffs(d.lprime[0]), ints({a, 1, 0})));
  }
  CHECK(mixed_seen);
}

TEST_CASE("decomposition preconditions") {
  const auto base = logder::test::lines({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}, {0, 3, 1}});
  const Derivation quadratic(3, 2);
  CHECK(error_kind([&] { (void)cubic_shape_decomposition(base, LinearForm(ints({-1, 0, 1})), quadratic); }) ==
        ErrorKind::InvalidArgument);
}
