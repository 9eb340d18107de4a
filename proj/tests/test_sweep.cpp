#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "logder/sweep.hpp"
#include "support.hpp"

using namespace logder;

TEST_CASE("graph exhaustion: serial and parallel agree") {
  const auto s = graph_exhaustion(4, false);
  const auto p = graph_exhaustion(4, true);
  CHECK(s.graphs == 4 + 41);
  CHECK(s.ok());
  CHECK(p.graphs == s.graphs);
  CHECK(p.agree == s.agree);
  CHECK(p.errors == s.errors);
}

TEST_CASE("squares sweep: serial and parallel agree") {
  const auto s = squares_sweep(11, 30, 5, 0.5, false);
  const auto p = squares_sweep(11, 30, 5, 0.5, true);
  CHECK(s.ok());
  CHECK(s.passed == p.passed);
}

TEST_CASE("random bounds sweep: serial and parallel agree") {
  RandomArrangementOptions opt;
  opt.max_lines = 7;
  const auto s = random_bounds_sweep(2024, 8, opt, false);
  const auto p = random_bounds_sweep(2024, 8, opt, true);
  REQUIRE(s.items.size() == p.items.size());
  CHECK(s.ok());
  for (std::size_t i = 0; i < s.items.size(); ++i) {
    CHECK(s.items[i].seed == p.items[i].seed);
    CHECK(s.items[i].arrangement == p.items[i].arrangement);
    CHECK(s.items[i].bounds.r == p.items[i].bounds.r);
    CHECK(s.items[i].bounds.alpha0 == p.items[i].bounds.alpha0);
    CHECK(s.items[i].addition_deletion.collapsed == p.items[i].addition_deletion.collapsed);
  }
}

TEST_CASE("same seed, same arrangements") {
  RandomArrangementOptions opt;
  const auto a = random_bounds_sweep(7, 3, opt, false);
  const auto b = random_bounds_sweep(7, 3, opt, false);
  for (std::size_t i = 0; i < 3; ++i) CHECK(a.items[i].arrangement == b.items[i].arrangement);
}

TEST_CASE("family instances") {
  const auto vb = family_instances(FamilyId::Vb, 9);
  REQUIRE(vb.size() == 3);
  CHECK_FALSE(vb[0].transformed);
  CHECK(vb[1].transformed);
  const auto res = family_sweep(vb, true);
  CHECK(res.errors.empty());
  CHECK(res.passing() == 3);
  CHECK(family_instances(FamilyId::Ia, 9).size() >= 3);
}

TEST_CASE("bounds sweep on fixtures") {
  std::vector<Arrangement> arrs;
  for (const char* name : {"non-fano.arr", "b1.arr", "a213.arr"}) arrs.push_back(logder::test::fixture(name));
  const auto items = bounds_sweep(arrs, true);
  for (const auto& it : items) CHECK(it.ok());
}
