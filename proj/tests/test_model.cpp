#include <random>
#include <stdexcept>

#include "colnum/model.hpp"
#include "doctest.h"

using namespace colnum;

TEST_CASE("enumerate_columns examples") {
  CHECK(enumerate_columns(TypedMatrix({0}, {3})) ==
        ColumnSet({{0, 1}, {1, 0}, {1, 1}, {1, 2}, {1, 3}}));
  CHECK(enumerate_columns(TypedMatrix({0, 1}, {2, 4})) ==
        ColumnSet({{0, 1}, {1, 0}, {1, 1}, {1, 2}, {2, 1}, {2, 3}}));
  CHECK(enumerate_columns(TypedMatrix({1}, {0})) == ColumnSet({{0, 1}}));
}

TEST_CASE("column sets reject repeats") {
  CHECK_THROWS_AS(ColumnSet({{1, 2}, {1, 2}}), std::invalid_argument);
}

TEST_CASE("column_count examples") {
  CHECK(column_count(family(Family::F1, 10)) == 12);
  CHECK(column_count(TypedMatrix({1}, {0})) == 1);
  CHECK(column_count(family(Family::F3, 14)) == 18);
}

TEST_CASE("delta examples") {
  CHECK(delta_endpoints(family(Family::F1, 10)) == 10);
  CHECK(delta_endpoints(TypedMatrix({0}, {1})) == 1);
  CHECK_THROWS_AS(delta_endpoints(TypedMatrix({1, 2}, {0, 2})), std::domain_error);

  ColumnSet unit({{1, 0}, {0, 1}, {1, 1}});
  CHECK(delta_bruteforce(unit) == 1);
  CHECK(is_generic(unit));
  ColumnSet parallel({{1, 0}, {2, 0}});
  CHECK(delta_bruteforce(parallel) == 0);
  CHECK_FALSE(is_generic(parallel));
  CHECK_FALSE(has_rank_two(parallel));

  ColumnSet f2 = enumerate_columns(family(Family::F2, 7));
  CHECK(delta_bruteforce(f2) == 7);
  CHECK(is_generic(f2));
}

TEST_CASE("normalize tightens endpoints without changing columns") {
  TypedMatrix M({-3, 2, 3}, {5, 6, 9});
  TypedMatrix N = normalize(M);
  CHECK(N == TypedMatrix({-3, 3, 4}, {5, 5, 8}));
  CHECK(enumerate_columns(N) == enumerate_columns(M));
  CHECK(normalize(TypedMatrix({4}, {4})) == TypedMatrix({4}, {4}));
  CHECK(normalize(TypedMatrix({0, 4}, {3, 4})) == TypedMatrix({0, 1}, {3, 0}));
}

TEST_CASE("random typed matrices: count, delta and genericity") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> md(1, 10);
  std::uniform_int_distribution<std::int64_t> vd(-50, 50);
  int rank_two = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    auto m = static_cast<size_t>(md(rng));
    std::vector<std::int64_t> a(m), b(m);
    for (size_t i = 0; i < m; ++i) {
      a[i] = vd(rng);
      b[i] = vd(rng);
    }
    TypedMatrix M(a, b);
    ColumnSet cols = enumerate_columns(M);
    REQUIRE(column_count(M) == static_cast<std::int64_t>(cols.size()));
    REQUIRE(is_generic(cols));
    if (cols.size() >= 2) {
      ++rank_two;
      REQUIRE(delta_endpoints(M) == delta_bruteforce(cols));
    }
  }
  CHECK(rank_two > 900);
}

TEST_CASE("g_tilde") {
  CHECK(g_tilde(385) == 388);
  CHECK(g_tilde(8) == 12);
  CHECK(g_tilde(6) == 8);
  for (std::int64_t d = 1; d <= 1'000'000; ++d) REQUIRE(g_tilde(d) == g_tilde_by_cases(d));
}

TEST_CASE("families") {
  CHECK(family(Family::F1, 5) == TypedMatrix({0}, {5}));
  CHECK(column_count(family(Family::F1, 5)) == 7);
  CHECK(family(Family::F3, 14) == TypedMatrix({0, 5, 10}, {8, 11, 14}));
  CHECK_THROWS_AS(family(Family::F2, 6), std::invalid_argument);
  CHECK_THROWS_AS(family(Family::F3, 8), std::invalid_argument);
  CHECK_THROWS_AS(family(Family::F3, 15), std::invalid_argument);

  auto verify = [](const TypedMatrix& M, std::int64_t delta, std::int64_t extra) {
    ColumnSet cols = enumerate_columns(M);
    REQUIRE(column_count(M) == delta + extra);
    REQUIRE(delta_endpoints(M) == delta);
    REQUIRE(delta_bruteforce(cols) == delta);
    REQUIRE(is_generic(cols));
  };
  for (std::int64_t d = 1; d <= 200; ++d) verify(family(Family::F1, d), d, 2);
  for (std::int64_t d = 3; d <= 199; d += 2) verify(family(Family::F2, d), d, 3);
  // Delta = 1 is degenerate: (0,1) and (2,1) already have determinant -2.
  CHECK(column_count(family(Family::F2, 1)) == 4);
  CHECK(delta_endpoints(family(Family::F2, 1)) == 2);
  for (std::int64_t s = 1; s <= 20; ++s) {
    verify(family(Family::F3, 12 * s + 2), 12 * s + 2, 4);
    verify(family(Family::F3, 12 * s + 8), 12 * s + 8, 4);
  }
}

TEST_CASE("type-3 extremal class") {
  CHECK(type3_extremal(14, 10) == family(Family::F3, 14));
  CHECK(type3_extremal(20, 16) == family(Family::F3, 20));
  CHECK_THROWS_AS(type3_extremal(14, 11), std::invalid_argument);
  CHECK_THROWS_AS(type3_extremal(12, 10), std::invalid_argument);
  CHECK_THROWS_AS(type3_extremal(14, 7), std::invalid_argument);
  for (std::int64_t d = 8; d <= 200; d += 6) {
    for (std::int64_t a3 = 0; a3 <= d + 2; ++a3) {
      if (a3 % 3 != 1 || 3 * a3 < 2 * d || 4 * a3 > 3 * d + 4) continue;
      TypedMatrix M = type3_extremal(d, a3);
      REQUIRE(column_count(M) == d + 4);
      REQUIRE(delta_endpoints(M) <= d);
    }
  }
}

TEST_CASE("type-2 extremal for Delta = 4n") {
  for (std::int64_t d = 4; d <= 200; d += 4) {
    TypedMatrix M = type2_extremal(d);
    REQUIRE(column_count(M) == d + 2);
    REQUIRE(delta_endpoints(M) == d);
  }
  CHECK_THROWS_AS(type2_extremal(6), std::invalid_argument);
}
