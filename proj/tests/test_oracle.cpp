#include <algorithm>
#include <stdexcept>

#include "colnum/bounds.hpp"
#include "colnum/lp.hpp"
#include "colnum/model.hpp"
#include "colnum/oracle.hpp"
#include "colnum/reduction.hpp"
#include "doctest.h"

using namespace colnum;
using namespace colnum::oracle;

namespace {

// Every typed matrix with rows in [-W, W], no pruning, no normalization.
std::int64_t brute_best(std::int64_t delta, std::int64_t m, std::int64_t W) {
  std::vector<std::int64_t> a(static_cast<size_t>(m), 1), b(static_cast<size_t>(m), 0);
  std::int64_t best = 0;
  auto rec = [&](auto&& self, std::int64_t k) -> void {
    if (k > m) {
      TypedMatrix M(a, b);
      ColumnSet cols = enumerate_columns(M);
      if (!has_rank_two(cols) || delta_bruteforce(cols) > delta) return;
      best = std::max(best, static_cast<std::int64_t>(cols.size()));
      return;
    }
    size_t i = static_cast<size_t>(k - 1);
    a[i] = 1, b[i] = 0;
    self(self, k + 1);
    for (std::int64_t x = -W; x <= W; ++x)
      for (std::int64_t y = x; y <= W && k * (y - x) <= delta; ++y) {
        a[i] = x, b[i] = y;
        self(self, k + 1);
      }
    a[i] = 1, b[i] = 0;
  };
  rec(rec, 1);
  return best;
}

}  // namespace

TEST_CASE("vertex enumeration matches the simplex") {
  CHECK(vertex_enumerate_lp_value(3) == 1);
  CHECK(vertex_enumerate_lp_value(4) == make_rational(35, 36));
  CHECK(vertex_enumerate_lp_value(5) == make_rational(119, 120));
  for (std::int64_t m = 1; m <= 6; ++m) CHECK(vertex_enumerate_lp_value(m) == lp::solve(lp::build_primal(m)).value);
  CHECK_THROWS_AS(vertex_enumerate_lp_value(7), std::invalid_argument);
  CHECK_THROWS_AS(vertex_enumerate_lp_value(0), std::invalid_argument);
}

TEST_CASE("search agrees with unpruned enumeration") {
  for (std::int64_t d = 1; d <= 6; ++d) {
    std::int64_t m = std::min<std::int64_t>(2, type_limit(d));
    std::int64_t W = d;
    SearchConfig cfg{.delta = d, .m_max = m, .window = W};
    SearchResult r = best_typed_matrix(cfg);
    CAPTURE(d);
    CHECK(r.count == brute_best(d, m, W));
    cfg.normalize_a1 = false;
    CHECK(best_typed_matrix(cfg).count == r.count);
  }
}

TEST_CASE("witnesses are valid") {
  for (std::int64_t d = 1; d <= 16; ++d) {
    SearchResult r = best_typed_matrix({.delta = d});
    ColumnSet cols = enumerate_columns(r.witness);
    CAPTURE(d);
    CHECK(static_cast<std::int64_t>(cols.size()) == r.count);
    CHECK(delta_bruteforce(cols) <= d);
    CHECK(is_generic(cols));
    CHECK(r.witness.m() <= type_limit(d));
    CHECK(r.nodes_explored > 0);
  }
}

TEST_CASE("search examples") {
  SearchResult seven = best_typed_matrix({.delta = 7});
  CHECK(seven.count >= 10);
  CHECK(column_count(family(Family::F2, 7)) == 10);
  // Delta = 2 falls short of g_tilde(2) = 6: only 4 columns are reachable.
  CHECK(best_typed_matrix({.delta = 2}).count == 4);
  CHECK(g_tilde(2) == 6);
  CHECK_THROWS_AS(best_typed_matrix({.delta = 31}), std::invalid_argument);
  CHECK_THROWS_AS(best_typed_matrix({.delta = 8, .m_max = 5}), std::invalid_argument);
  CHECK(best_typed_matrix({.delta = 31, .m_max = 2, .allow_large = true}).count == 34);
}

TEST_CASE("window stability and thread invariance") {
  for (std::int64_t d = 1; d <= 12; ++d) {
    SearchResult two = best_typed_matrix({.delta = d});
    SearchResult three = best_typed_matrix({.delta = d, .window = 3 * d});
    SearchResult split = best_typed_matrix({.delta = d, .jobs = 3});
    CAPTURE(d);
    CHECK(two.count == three.count);
    CHECK(two.witness == three.witness);
    CHECK(split.count == two.count);
    CHECK(split.witness == two.witness);
  }
}

TEST_CASE("type at most 3 never beats g_tilde") {
  for (std::int64_t d = 1; d <= 30; ++d) {
    std::int64_t m = std::min<std::int64_t>(3, type_limit(d));
    SearchResult r = best_typed_matrix({.delta = d, .m_max = m});
    CAPTURE(d);
    CHECK(r.count <= g_tilde(d));
    if (d >= 3) CHECK(r.count == g_tilde(d));
    CHECK(r.count <= bounds::refined_small_type_bound(r.witness.m(), d));
  }
}
