#include <numeric>
#include <random>

#include "colnum/numtheory.hpp"
#include "doctest.h"

using namespace colnum;
using namespace colnum::nt;

namespace {

// Oracles by direct enumeration, independent of the sieve and Mobius paths.
std::int64_t phi_brute(std::int64_t k) {
  std::int64_t c = 0;
  for (std::int64_t j = 1; j <= k; ++j) c += std::gcd(j, k) == 1;
  return c;
}

std::int64_t tau_brute(std::int64_t k) {
  std::int64_t c = 0;
  for (std::int64_t d = 1; d <= k; ++d)
    if (k % d == 0 && std::gcd(d, k / d) == 1) ++c;
  return c;
}

std::int64_t squarefree_divisors_brute(std::int64_t k) {
  std::int64_t c = 0;
  for (std::int64_t d = 1; d <= k; ++d) {
    if (k % d != 0) continue;
    bool sf = true;
    for (std::int64_t p = 2; p * p <= d; ++p)
      if (d % (p * p) == 0) sf = false;
    c += sf;
  }
  return c;
}

std::int64_t phi_interval_brute(std::int64_t a, std::int64_t b, std::int64_t k) {
  std::int64_t c = 0;
  for (std::int64_t n = a; n <= b; ++n) c += std::gcd(n, k) == 1;
  return c;
}

}  // namespace

TEST_CASE("phi examples") {
  CHECK(phi(1) == 1);
  CHECK(phi(12) == 4);
  CHECK(phi(7) == 6);
  CHECK_THROWS_AS(phi(0), std::invalid_argument);
  CHECK_THROWS_AS(phi(-3), std::invalid_argument);
}

TEST_CASE("tau_unitary examples") {
  CHECK(tau_unitary(1) == 1);
  CHECK(tau_unitary(12) == 4);
  for (std::int64_t p : {2, 3, 5, 7919, 1'000'003}) CHECK(tau_unitary(p) == 2);
  CHECK_THROWS_AS(tau_unitary(0), std::invalid_argument);
}

TEST_CASE("sieve tables agree with per-element definitions") {
  ArithCache cache(3000);
  CHECK(cache.phi_table()[1] == 1);
  CHECK(cache.mu_table()[1] == 1);
  CHECK(cache.tau_table()[1] == 1);
  for (std::int64_t k = 1; k <= 3000; ++k) {
    auto i = static_cast<size_t>(k);
    REQUIRE(cache.phi_table()[i] == phi_brute(k));
    if (k <= 600) {
      REQUIRE(cache.tau_table()[i] == tau_brute(k));
      REQUIRE(cache.tau_table()[i] == squarefree_divisors_brute(k));
    }
  }
}

TEST_CASE("values above the sieve limit use factorization") {
  std::int64_t k = 1'000'000'007LL * 2;  // 2 * prime
  CHECK(phi(k) == 1'000'000'006LL);
  CHECK(tau_unitary(k) == 4);
  CHECK(mobius(k) == 1);
  CHECK(mobius(4'000'000'000LL) == 0);
  CHECK(phi(1'000'001) == phi_brute(1'000'001));
}

TEST_CASE("sieve cache round trip") {
  ArithCache cache(500);
  auto file = std::filesystem::temp_directory_path() / "colnum-sieve-test.bin";
  cache.save(file);
  auto loaded = ArithCache::load(file);
  REQUIRE(loaded.has_value());
  CHECK(loaded->limit() == 500);
  CHECK(std::equal(cache.phi_table().begin(), cache.phi_table().end(), loaded->phi_table().begin()));
  std::filesystem::remove(file);
  CHECK_FALSE(ArithCache::load(file).has_value());
}

TEST_CASE("phi_interval examples") {
  for (std::int64_t k : {1, 2, 6, 12, 30, 97}) CHECK(phi_interval(1, k, k) == phi(k));
  CHECK(phi_interval(4, 10, 6) == 2);
  CHECK(phi_interval(0, 10, 1) == 11);
  CHECK(phi_interval(5, 4, 7) == 0);  // empty interval
  CHECK_THROWS_AS(phi_interval(6, 4, 7), std::invalid_argument);
  CHECK_THROWS_AS(phi_interval(0, 4, 0), std::invalid_argument);
}

TEST_CASE("phi_interval_error examples") {
  for (std::int64_t k : {1, 4, 9, 30}) CHECK(phi_interval_error(1, k, k) == make_rational(phi(k), k));
  CHECK(phi_interval_error(0, 10, 1) == 1);
}

TEST_CASE("Mobius count matches enumeration; error bounded by tau") {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<std::int64_t> kd(1, 10'000);
  std::uniform_int_distribution<std::int64_t> ad(-100'000, 100'000);
  for (int trial = 0; trial < 1000; ++trial) {
    std::int64_t k = kd(rng);
    std::int64_t a = ad(rng);
    std::int64_t b = ad(rng);
    if (a > b) std::swap(a, b);
    REQUIRE(phi_interval(a, b, k) == phi_interval_brute(a, b, k));
    REQUIRE(abs(phi_interval_error(a, b, k)) <= tau_unitary(k));
  }
}

TEST_CASE("summatory functions") {
  CHECK(sum_phi(10) == 32);
  CHECK(sum_phi(1) == 1);
  CHECK(sum_phi_over_k(5) == make_rational(52, 15));
  CHECK(sum_phi_over_k2(3) == 1 + make_rational(1, 4) + make_rational(2, 9));
  CHECK(sum_tau(12) == 1 + 2 + 2 + 2 + 2 + 4 + 2 + 2 + 2 + 4 + 2 + 4);
}

TEST_CASE("totient-sum window") {
  Rational eps = make_rational(1, 1000);
  CHECK(check_lemma21(1880, eps));
  CHECK(check_lemma21(5000, eps));
  CHECK_FALSE(check_lemma21(1, eps));
  auto rows = window_scan(1870, 1890, eps);
  REQUIRE(rows.size() == 21);
  CHECK(rows.back().x == 1890);
  CHECK(rows[10].sum_phi == sum_phi(1880));
  CHECK(rows[10].sum_phi_over_k == sum_phi_over_k(1880));
}

TEST_CASE("x0 search for eps = 1/1000") {
  auto r = find_x0(make_rational(1, 1000));
  CHECK(r.analytic_crossover == 41568);
  CHECK(r.x0 <= 1880);
  CHECK_FALSE(check_lemma21(r.x0 - 1, make_rational(1, 1000)));
}

TEST_CASE("explicit error terms") {
  CHECK(sum_phi_error_holds(1) == true);
  CHECK(sum_phi_over_k_error_holds(1) == true);
  CHECK(sum_tau_bound_holds(2) == true);
  CHECK(sum_tau_bound_holds(1000) == true);
  // At x = 1 the logarithmic terms vanish and the bound drops to about 0.787.
  CHECK(sum_tau_bound_holds(1) == false);
  auto scan = scan_estimates(2000);
  CHECK(scan.phi_failures.empty());
  CHECK(scan.ratio_failures.empty());
  CHECK(scan.undecided.empty());
  CHECK(scan.tau_failures == std::vector<std::int64_t>{1});
}
