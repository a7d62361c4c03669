#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "colnum/lp.hpp"
#include "colnum/rational.hpp"

namespace colnum::bounds {

// Index ranges split at beta m = m / sqrt(3) and gamma m = m sqrt(2/3).
// Neither is an integer, so k <= beta m is 3k^2 < m^2, k <= gamma m is
// 3k^2 < 2m^2.
struct ThreeRanges {
  std::int64_t low_hi = 0;   // [1, low_hi]
  std::int64_t mid_hi = 0;   // [low_hi + 1, mid_hi]
  std::int64_t m = 0;        // [mid_hi + 1, m]
};
ThreeRanges three_ranges(std::int64_t m);

// Y = C phi(k) phi(l) on the three rectangles low x high, mid x mid and
// high x low, stored symbolically.
lp::DualCertificate analytic_certificate(std::int64_t m, const Rational& C);

// The per-regime feasibility conditions 2 C Phi(range) >= 1 and the exact
// objective 2C (2 A_low A_high + A_mid^2), A = sum phi(k)/k on a range.
struct AnalyticReport {
  std::int64_t m = 0;
  Rational C;
  ThreeRanges ranges;
  std::int64_t phi_low = 0, phi_mid = 0, phi_high = 0;
  bool low_rows = false;   // rows k <= beta m, partner range high
  bool mid_rows = false;
  bool high_rows = false;  // rows k >= gamma m, partner range low
  Rational objective;
  bool feasible() const { return low_rows && mid_rows && high_rows; }
};
AnalyticReport analyze_certificate(std::int64_t m, const Rational& C);

// Window for C: lower = (pi^2/6) / m^2 / (1/3 - 5 eps/3), rounded up;
// upper = (w/2) (pi^2/6)^2 / (m^2 f(eps)), rounded down. Throws
// std::domain_error when the window is empty or eps >= 1/5.
std::pair<Rational, Rational> c_window(std::int64_t m, const Rational& eps, const Rational& w);
// beta m >= x0(eps), the range where the totient-sum windows apply.
bool c_window_applicable(std::int64_t m, const Rational& eps);

struct EpsPolicy {
  Rational base = Rational(37, 20);  // eps = base / m
  int max_doublings = 8;
  // After the budget is spent, solve the full dual D_m instead.
  bool full_dual_fallback = true;
};

struct SweepRecord {
  std::int64_t m = 0;
  Rational bound;
  bool solved = false;
  std::optional<Rational> eps;  // none for propagation and for the full dual
  double wall_ms = 0;
  bool certified = true;  // bound <= w
};

struct SweepReport {
  Rational w;
  std::vector<SweepRecord> records;
  std::vector<std::int64_t> failures;
  std::size_t solves = 0;
  bool passed() const { return failures.empty(); }
};

// Bounds z_m <= w for m_lo <= m <= m_hi: solve the approximate dual only
// when bound_{m-1} + phi(m)/m^2 exceeds w. With jobs > 1 the range is cut
// into contiguous parts solved concurrently, each starting with a solve.
SweepReport sweep(std::int64_t m_lo, std::int64_t m_hi, const Rational& w, const EpsPolicy& policy = {},
                  unsigned jobs = 1);

// z Delta + 1 + (m/zeta(2))(log m + 2 gamma - 1 - 2 zeta'(2)/zeta(2))
// + 15 sqrt(m) log m, rounded up. For m <= 3 the exact Delta + 2, + 3, + 4.
Rational column_bound(std::int64_t m, std::int64_t delta, const Rational& z);

// 1 + sum_{k <= m} max (phi(a,b,k) - phi(k)(b-a)/k), the maximum over
// endpoints coprime to k. Replaces the generic error term for small m.
Rational exact_error_constant(std::int64_t m);
// z Delta + ceil(exact_error_constant(m)).
Rational column_bound_exact(std::int64_t m, std::int64_t delta, const Rational& z);

// Delta + 2 (m = 1); Delta + 3 or + 2 by parity (m = 2); g_tilde (m = 3).
std::int64_t refined_small_type_bound(std::int64_t m, std::int64_t delta);

// w Delta + 1 + (s/zeta(2))(log s + K) + 15 sqrt(s) log s <= Delta with
// s = sqrt(pi Delta / 2), decided with outward rounding. An undecided
// comparison counts as false.
bool verify_threshold(std::int64_t delta, const Rational& w);

}  // namespace colnum::bounds
