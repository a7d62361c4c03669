#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "colnum/rational.hpp"

namespace colnum::nt {

// Sieved tables of phi, mu, and the unitary divisor count tau for
// 1 <= k <= limit. Index 0 is unused. Immutable once built.
class ArithCache {
 public:
  explicit ArithCache(std::int64_t limit = 1'000'000);

  std::int64_t limit() const { return limit_; }
  std::span<const std::int64_t> phi_table() const { return phi_; }
  std::span<const std::int8_t> mu_table() const { return mu_; }
  std::span<const std::int32_t> tau_table() const { return tau_; }
  // Smallest prime factor, 0 at index 0 and 1 at index 1.
  std::span<const std::int32_t> spf_table() const { return spf_; }

  // Binary persistence used by the sieve table cache directory.
  void save(const std::filesystem::path& file) const;
  static std::optional<ArithCache> load(const std::filesystem::path& file);

 private:
  struct Unfilled {};
  explicit ArithCache(Unfilled) {}
  std::int64_t limit_ = 0;
  std::vector<std::int64_t> phi_;
  std::vector<std::int8_t> mu_;
  std::vector<std::int32_t> tau_;
  std::vector<std::int32_t> spf_;
};

// Process-wide cache with limit 10^6. When COLNUM_CACHE_DIR is set the
// tables are loaded from (or written to) that directory.
const ArithCache& default_cache();

// Distinct prime divisors in increasing order. Uses the sieve below its
// limit and trial division above it.
std::vector<std::int64_t> distinct_primes(std::int64_t k);

std::int64_t phi(std::int64_t k);
int mobius(std::int64_t k);
std::int64_t tau_unitary(std::int64_t k);

// Number of integers in [a, b] coprime to k, by the Mobius identity
// sum_{d | k} mu(d) * #{n in [a, b] : d | n}. Returns 0 when a = b + 1.
std::int64_t phi_interval(std::int64_t a, std::int64_t b, std::int64_t k);

// phi_interval(a, b, k) - (phi(k) / k) * (b - a), exactly.
Rational phi_interval_error(std::int64_t a, std::int64_t b, std::int64_t k);

std::int64_t sum_phi(std::int64_t x);
Rational sum_phi_over_k(std::int64_t x);
Rational sum_phi_over_k2(std::int64_t x);
std::int64_t sum_tau(std::int64_t x);

// One row of the explicit totient-sum window check at relative tolerance eps.
struct WindowRow {
  std::int64_t x = 0;
  std::int64_t sum_phi = 0;
  Rational sum_phi_over_k;
  bool phi_lower = false;   // (1-eps) 3/pi^2 x^2 <= sum phi
  bool phi_upper = false;   // sum phi <= (1+eps) 3/pi^2 x^2
  bool ratio_lower = false; // (1-eps) 6/pi^2 x <= sum phi/k
  bool ratio_upper = false; // sum phi/k <= (1+eps) 6/pi^2 x
  bool pass() const { return phi_lower && phi_upper && ratio_lower && ratio_upper; }
};

// Rigorous: a true flag means the inequality holds for the exact value of pi^2.
WindowRow window_row(std::int64_t x, const Rational& eps);
bool check_lemma21(std::int64_t x, const Rational& eps);
// Rows for every x in [from, to], sharing running sums.
std::vector<WindowRow> window_scan(std::int64_t from, std::int64_t to, const Rational& eps);

// Smallest x0 with both window inequalities holding for every x >= x0. The
// range below the analytic crossover (where x(log x + 2) and log x + 3 fall
// under the eps margins) is scanned directly.
struct X0Result {
  std::int64_t x0 = 0;
  std::int64_t analytic_crossover = 0;
};
X0Result find_x0(const Rational& eps);

// Explicit error-term checks, evaluated with outward rounding. Each returns
// nullopt only if the comparison cannot be decided.
std::optional<bool> sum_tau_bound_holds(std::int64_t x);
std::optional<bool> sum_phi_error_holds(std::int64_t x);
std::optional<bool> sum_phi_over_k_error_holds(std::int64_t x);

// The three error-term checks for every 1 <= x <= x_max with shared running
// sums. Lists the x values where a check failed or stayed undecided.
struct EstimateScan {
  std::int64_t x_max = 0;
  std::vector<std::int64_t> tau_failures;
  std::vector<std::int64_t> phi_failures;
  std::vector<std::int64_t> ratio_failures;
  std::vector<std::int64_t> undecided;
};
EstimateScan scan_estimates(std::int64_t x_max);

}  // namespace colnum::nt
