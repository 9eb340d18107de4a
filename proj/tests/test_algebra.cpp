#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "logder/algebra.hpp"
#include "support.hpp"

using namespace logder;
using logder::test::error_kind;
using logder::test::ints;

namespace {

HomPoly var(int i) { return HomPoly::variable(3, i); }

Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> d(-2, 2);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Scalar(d(rng));
  }
  return m;
}

}  // namespace

TEST_CASE("scalar arithmetic in Q(w)") {
  const Scalar w = Scalar::omega();
  CHECK(w * w == Scalar(-1) - w);
  CHECK(w * w * w == Scalar(1));
  CHECK(Scalar(1) + w + w * w == Scalar(0));
  const Scalar z(Rational(3, 4), Rational(-2, 5));
  CHECK(z * z.inverse() == Scalar(1));
  CHECK(Scalar(Rational(1, 2)).to_string() == "1/2");
  CHECK(Scalar(Rational(-3)).to_string() == "-3");
  CHECK((Scalar(1) + w).to_string() == "1+w");
  CHECK(error_kind([] { (void)Scalar(0).inverse(); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("parse_scalar") {
  CHECK(parse_scalar("3") == Scalar(3));
  CHECK(parse_scalar("-1/2") == Scalar(Rational(-1, 2)));
  CHECK(parse_scalar("w") == Scalar::omega());
  CHECK(parse_scalar("1+2w") == Scalar(Rational(1), Rational(2)));
  CHECK(parse_scalar("-1/2-3/4w") == Scalar(Rational(-1, 2), Rational(-3, 4)));
  CHECK(parse_scalar("2*w") == Scalar(Rational(0), Rational(2)));
  CHECK(error_kind([] { (void)parse_scalar("1/0"); }) == ErrorKind::ParseError);
  CHECK(error_kind([] { (void)parse_scalar("abc"); }) == ErrorKind::ParseError);
}

TEST_CASE("monomial basis order") {
  const auto& b = monomial_basis(3, 2);
  REQUIRE(b.size() == 6);
  CHECK(b[0] == Exponent{2, 0, 0});
  CHECK(b[1] == Exponent{1, 1, 0});
  CHECK(b[3] == Exponent{0, 2, 0});
  CHECK(b[5] == Exponent{0, 0, 2});
  CHECK(basis_size(3, 4) == 15);
  for (std::size_t i = 0; i < b.size(); ++i) CHECK(monomial_index(b[i]) == i);
}

TEST_CASE("polynomial arithmetic") {
  const HomPoly x = var(0), y = var(1), z = var(2);
  const HomPoly f = (x + y) * (x - y);
  CHECK(f == x * x - y * y);
  CHECK(f.degree() == 2);
  CHECK(f.partial(0) == x * Scalar(2));
  CHECK(f.partial(2).is_zero());
  CHECK(pow(x + z, 3) == x * x * x + x * x * z * Scalar(3) + x * z * z * Scalar(3) + z * z * z);
  const Vector p = ints({2, 3, 5});
  CHECK(f.evaluate(p) == Scalar(4 - 9));
  CHECK(f.to_string() == "x^2 - y^2");
}

TEST_CASE("Euler identity: theta_E(f) = deg(f) f") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int degree = 1; degree <= 4; ++degree) {
    HomPoly f(3, degree);
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = Scalar(d(rng));
    CHECK(apply_derivation(Derivation::euler(3), f) == f * Scalar(degree));
  }
}

TEST_CASE("division by a linear form") {
  const HomPoly x = var(0), y = var(1), z = var(2);
  const LinearForm l(ints({1, -1, 0}));
  const auto div = divide_by_linear(x * x - y * y, l);
  REQUIRE(div.divisible());
  CHECK(*div.quotient == x + y);
  const auto nodiv = divide_by_linear(x * x + z * z, l);
  CHECK_FALSE(nodiv.divisible());
  CHECK_FALSE(nodiv.remainder.is_zero());
}

TEST_CASE("rref and nullspace") {
  const Matrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  const auto ns = rref_nullspace(m);
  CHECK(ns.rank == 2);
  REQUIRE(ns.basis.size() == 1);
  CHECK(ns.basis[0] == ints({-1, -1, 1}));
  CHECK(determinant(Matrix{{2, 1}, {1, 1}}) == Scalar(1));
  CHECK(determinant(m) == Scalar(0));
}

TEST_CASE("property: rank + nullity = columns and kernel vectors are annihilated") {
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + trial % 6, cols = 1 + (trial / 3) % 7;
    const Matrix m = random_matrix(rng, rows, cols);
    const auto ns = rref_nullspace(m);
    CHECK(ns.rank + ns.basis.size() == cols);
    CHECK(ns.rank == rank(m));
    for (const auto& v : ns.basis) CHECK(is_zero_vector(m * v));
  }
}

TEST_CASE("EchelonSpan membership does not depend on insertion order") {
  EchelonSpan a(3), b(3);
  CHECK(a.add(ints({1, 1, 0})));
  CHECK(a.add(ints({0, 1, 1})));
  CHECK_FALSE(a.add(ints({1, 2, 1})));
  CHECK(b.add(ints({0, 1, 1})));
  CHECK(b.add(ints({1, 1, 0})));
  CHECK(a.contains(ints({1, 0, -1})));
  CHECK(b.contains(ints({1, 0, -1})));
  CHECK_FALSE(a.contains(ints({0, 0, 1})));
  CHECK(a.dim() == 2);
}

TEST_CASE("vanishing dimension of points") {
  // Five points in general position lie on exactly one conic.
  const std::vector<Vector> five{ints({1, 0, 0}), ints({0, 1, 0}), ints({0, 0, 1}), ints({1, 1, 1}), ints({1, 2, 3})};
  CHECK(vanishing_dimension(five, 2) == 1);
  CHECK(vanishing_dimension(five, 1) == 0);
  // Three collinear points impose only two conditions on lines.
  const std::vector<Vector> collinear{ints({1, 0, 0}), ints({0, 1, 0}), ints({1, 1, 0})};
  CHECK(vanishing_dimension(collinear, 1) == 1);
  CHECK(evaluation_matrix(five, 2).rows() == 5);
  CHECK(evaluation_matrix(five, 2).cols() == 6);
}
