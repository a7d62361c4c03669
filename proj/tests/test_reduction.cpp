#include <random>

#include "colnum/reduction.hpp"
#include "doctest.h"

using namespace colnum;

namespace {

ColumnSet transform(const ColumnSet& A, std::int64_t u11, std::int64_t u12, std::int64_t u21,
                    std::int64_t u22) {
  std::vector<Column> out;
  for (const Column& c : A.columns()) out.push_back({u11 * c.x + u12 * c.y, u21 * c.x + u22 * c.y});
  return ColumnSet(out);
}

// Smallest width over all primitive directions with entries up to `r`.
std::int64_t brute_min_width(const ColumnSet& A, std::int64_t r) {
  std::int64_t best = -1;
  for (std::int64_t x = -r; x <= r; ++x)
    for (std::int64_t y = -r; y <= r; ++y) {
      if (std::gcd(x, y) != 1) continue;
      std::int64_t w = width_in_direction(A, {x, y});
      if (best < 0 || w < best) best = w;
    }
  return best;
}

}  // namespace

TEST_CASE("width_in_direction") {
  CHECK(width_in_direction(ColumnSet({{1, 0}, {0, 1}}), {1, 0}) == 2);
  ColumnSet f1 = enumerate_columns(family(Family::F1, 10));
  CHECK(width_in_direction(f1, {1, 0}) == 2);
  CHECK(width_in_direction(f1, {0, 1}) == 20);
  CHECK_THROWS_AS(width_in_direction(f1, {0, 0}), PreconditionError);
}

TEST_CASE("limits") {
  CHECK(width_squared_limit(10) == 62);  // 20 pi = 62.83
  CHECK(width_squared_limit(1) == 6);
  CHECK(type_limit(2) == 1);
  CHECK(type_limit(8) == 3);    // 4 pi = 12.57
  CHECK(type_limit(12) == 4);   // 6 pi = 18.85
  CHECK(type_limit(10) == 3);   // 5 pi = 15.71
}

TEST_CASE("find_thin_direction examples") {
  ColumnSet f1 = enumerate_columns(family(Family::F1, 10));
  ThinDirection t = find_thin_direction(f1, 10);
  CHECK(t.width <= 7);
  CHECK(t.width == width_in_direction(f1, t.v));

  ColumnSet moved = transform(f1, 1, 0, 3, 1);
  ThinDirection t2 = find_thin_direction(moved, 10);
  CHECK(t2.width <= 7);

  ColumnSet unit({{1, 0}, {0, 1}, {1, 1}});
  ThinDirection t3 = find_thin_direction(unit, 1);
  CHECK(t3.width == 2);
  bool listed = (t3.v == Column{1, 0}) || (t3.v == Column{0, 1}) || (t3.v == Column{1, -1});
  CHECK(listed);

  CHECK_THROWS_AS(find_thin_direction(ColumnSet({{1, 0}, {2, 0}}), 3), PreconditionError);
  CHECK_THROWS_AS(find_thin_direction(f1, 9), PreconditionError);
}

TEST_CASE("thin direction meets the lattice width bound on small sets") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> ent(-6, 6);
  int tested = 0;
  while (tested < 300) {
    std::vector<Column> cols;
    for (int i = 0; i < 5; ++i) cols.push_back({ent(rng), ent(rng)});
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    cols.erase(std::remove(cols.begin(), cols.end(), Column{0, 0}), cols.end());
    ColumnSet A(cols);
    if (A.size() < 2 || !is_generic(A)) continue;
    std::int64_t delta = delta_bruteforce(A);
    ThinDirection t = find_thin_direction(A, delta);
    REQUIRE(t.width * t.width <= width_squared_limit(delta));
    REQUIRE(t.width >= brute_min_width(A, 30));
    ++tested;
  }
}

TEST_CASE("reduce examples") {
  ColumnSet f2 = enumerate_columns(family(Family::F2, 7));
  TypedMatrix M = reduce(f2, 7);
  CHECK(column_count(M) >= 10);
  CHECK(delta_endpoints(M) <= 7);

  ColumnSet f1 = enumerate_columns(family(Family::F1, 10));
  ColumnSet moved = transform(f1, 2, 1, 1, 1);
  std::vector<Column> flipped;
  for (size_t i = 0; i < moved.size(); ++i) {
    Column c = moved.columns()[i];
    flipped.push_back(i % 3 == 0 ? Column{-c.x, -c.y} : c);
  }
  TypedMatrix M2 = reduce(ColumnSet(flipped), 10);
  CHECK(M2.m() <= 3);
  CHECK(column_count(M2) >= 12);

  TypedMatrix M3 = reduce(ColumnSet({{1, 0}, {0, 1}}), 2);
  CHECK(M3.m() <= 1);
  CHECK(column_count(M3) >= 2);

  CHECK_THROWS_AS(reduce(ColumnSet({{1, 0}, {0, 1}}), 1), PreconditionError);
}

TEST_CASE("reduce on transformed family matrices") {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<std::int64_t> ent(-10, 10);
  std::uniform_int_distribution<std::int64_t> dd(2, 60);
  std::bernoulli_distribution flip(0.5);
  for (int trial = 0; trial < 200; ++trial) {
    std::int64_t delta = dd(rng);
    TypedMatrix F = family(Family::F1, delta);
    if (trial % 3 == 1 && delta % 2 == 1 && delta >= 3) F = family(Family::F2, delta);
    if (trial % 3 == 2 && delta >= 14 && (delta % 12 == 2 || delta % 12 == 8))
      F = family(Family::F3, delta);
    std::int64_t u11, u12, u21, u22;
    do {
      u11 = ent(rng), u12 = ent(rng), u21 = ent(rng), u22 = ent(rng);
    } while (std::abs(u11 * u22 - u12 * u21) != 1);
    ColumnSet moved = transform(enumerate_columns(F), u11, u12, u21, u22);
    std::vector<Column> cols;
    for (const Column& c : moved.columns()) cols.push_back(flip(rng) ? Column{-c.x, -c.y} : c);
    ColumnSet A(cols);
    TypedMatrix M = reduce(A, delta);
    REQUIRE(column_count(M) >= static_cast<std::int64_t>(A.size()));
    REQUIRE(delta_endpoints(M) <= delta);
    REQUIRE(M.m() <= type_limit(delta));
  }
}
