#include <cmath>

#include "colnum/bounds.hpp"
#include "colnum/constants.hpp"
#include "colnum/lp.hpp"
#include "colnum/numtheory.hpp"
#include "doctest.h"

using namespace colnum;
using namespace colnum::bounds;

TEST_CASE("three ranges") {
  for (std::int64_t m = 1; m <= 5000; ++m) {
    ThreeRanges r = three_ranges(m);
    double b = m / std::sqrt(3.0), g = m * std::sqrt(2.0 / 3.0);
    REQUIRE(r.low_hi == static_cast<std::int64_t>(std::floor(b)));
    REQUIRE(r.mid_hi == static_cast<std::int64_t>(std::floor(g)));
  }
}

TEST_CASE("analytic certificate at m = 3257") {
  const std::int64_t m = 3257;
  Rational C = make_rational(496, 100) / (m * m);
  AnalyticReport rep = analyze_certificate(m, C);
  CHECK(rep.feasible());
  CHECK(rep.objective <= Rational(999, 1000));
  lp::DualCertificate cert = analytic_certificate(m, C);
  CHECK(cert.objective == rep.objective);
  CHECK(lp::check_dual_feasible(cert));

  AnalyticReport bad = analyze_certificate(m, Rational(1, m * m));
  CHECK_FALSE(bad.feasible());
  CHECK_FALSE(lp::check_dual_feasible(analytic_certificate(m, Rational(1, m * m))));
}

TEST_CASE("analytic certificate: regime test, rectangle check and full expansion agree") {
  for (std::int64_t m : {4, 9, 40, 151, 300}) {
    for (Rational c : {make_rational(496, 100), Rational(3), Rational(6), Rational(10)}) {
      CAPTURE(m);
      CAPTURE(to_string(c));
      Rational C = c / (m * m);
      AnalyticReport rep = analyze_certificate(m, C);
      lp::DualCertificate cert = analytic_certificate(m, C);
      bool rect = lp::check_dual_feasible(cert);
      CHECK(rect == rep.feasible());
      CHECK(lp::check_dual_feasible_streaming(cert) == rect);
      // Dual feasibility gives an upper bound on z_m.
      if (rect && m <= 40) CHECK(lp::z_value(m) <= rep.objective);
    }
  }
}

TEST_CASE("C window") {
  const std::int64_t m = 3257;
  auto [lo, hi] = c_window(m, Rational(1, 1000), Rational(999, 1000));
  Rational mm(m * m);
  CHECK(lo * mm > make_rational(49595, 10000));
  CHECK(lo * mm < make_rational(49597, 10000));
  CHECK(hi * mm > make_rational(49677, 10000));
  CHECK(hi * mm < make_rational(49679, 10000));
  Rational C = make_rational(496, 100) / mm;
  CHECK(lo <= C);
  CHECK(C <= hi);

  // eps = 0: lower = (pi^2 / 6) * 3 / m^2
  auto [lo0, hi0] = c_window(m, Rational(0), Rational(999, 1000));
  (void)hi0;
  CHECK(lo0 * mm >= constants::pi_squared().lo / 2);
  CHECK(lo0 * mm - constants::pi_squared().hi / 2 < Rational(1, 1000000000));

  for (std::int64_t mm2 = 3257; mm2 <= 10000; mm2 += 251) {
    auto [a, b] = c_window(mm2, Rational(1, 1000), Rational(999, 1000));
    CHECK(a <= b);
  }
  CHECK_THROWS_AS(c_window(m, Rational(1, 100), Rational(9, 10)), std::domain_error);
  CHECK_THROWS_AS(c_window(m, Rational(1, 5), Rational(999, 1000)), std::domain_error);
  CHECK(c_window_applicable(3257, Rational(1, 1000)));
  CHECK_FALSE(c_window_applicable(1000, Rational(1, 1000)));
}

TEST_CASE("sweep on a short range") {
  SweepReport rep = sweep(4, 80, Rational(999, 1000));
  CHECK(rep.passed());
  REQUIRE(rep.records.size() == 77);
  CHECK(rep.records.front().solved);
  for (std::size_t i = 1; i < rep.records.size(); ++i) {
    const auto& r = rep.records[i];
    CHECK(r.bound <= Rational(999, 1000));
    if (!r.solved) CHECK(r.bound == rep.records[i - 1].bound + make_rational(nt::phi(r.m), r.m * r.m));
    if (r.solved) CHECK(rep.records[i - 1].bound + make_rational(nt::phi(r.m), r.m * r.m) > Rational(999, 1000));
  }
  for (const auto& r : rep.records)
    if (r.m <= 12) CHECK(r.bound >= lp::z_value(r.m));
  CHECK(rep.records.front().bound == Rational(35, 36));
}

TEST_CASE("sweep examples") {
  SweepReport five = sweep(5, 5, Rational(999, 1000));
  REQUIRE(five.records.size() == 1);
  CHECK(five.records[0].bound == Rational(119, 120));
  CHECK(five.records[0].solved);

  // Without the full dual the approximate dual cannot reach z_5: the support
  // never contains the pairs {4,4}, {4,5}, {5,5}.
  EpsPolicy strict;
  strict.full_dual_fallback = false;
  SweepReport five_strict = sweep(5, 5, Rational(999, 1000), strict);
  CHECK_FALSE(five_strict.passed());
  CHECK(five_strict.records[0].bound == Rational(6, 5));

  // A w below z_5 must fail there.
  SweepReport low = sweep(5, 6, Rational(99, 100));
  CHECK(low.failures == std::vector<std::int64_t>{5});

  SweepReport split = sweep(4, 120, Rational(999, 1000), {}, 3);
  CHECK(split.passed());
  CHECK(split.records.size() == 117);
  CHECK_THROWS_AS(sweep(3, 10, Rational(999, 1000)), std::invalid_argument);
}

TEST_CASE("column bounds") {
  CHECK(column_bound(3, 100, Rational(1)) == 104);
  CHECK(column_bound(1, 100, Rational(1)) == 102);
  CHECK(column_bound(2, 7, Rational(1)) == 10);
  const std::int64_t D = 100000000;
  // floor(sqrt(pi/2 * 10^8)) = 12533
  const std::int64_t m = 12533;
  CHECK(column_bound(m, D, Rational(999, 1000)) <= D);
  CHECK(column_bound(m, D, Rational(999, 1000)) > Rational(999, 1000) * D);

  CHECK(exact_error_constant(5) == Rational(104, 15));
  CHECK(column_bound_exact(5, 600, Rational(119, 120)) == make_rational(119 * 600, 120) + 7);
  for (std::int64_t k = 1; k <= 60; ++k) {
    Rational one = exact_error_constant(k) - (k > 1 ? exact_error_constant(k - 1) : Rational(1));
    CHECK(one <= nt::tau_unitary(k));
    CHECK(one > 0);
  }
  // The generic error term dominates the exact one.
  for (std::int64_t mm = 4; mm <= 40; ++mm)
    CHECK(column_bound(mm, 1000, Rational(1)) >= column_bound_exact(mm, 1000, Rational(1)));
}

TEST_CASE("refined small-type bounds") {
  CHECK(refined_small_type_bound(2, 8) == 10);
  CHECK(refined_small_type_bound(2, 7) == 10);
  CHECK(refined_small_type_bound(3, 14) == 18);
  CHECK(refined_small_type_bound(1, 5) == 7);
  CHECK_THROWS_AS(refined_small_type_bound(4, 5), std::invalid_argument);
}

TEST_CASE("threshold") {
  CHECK(verify_threshold(100000000, Rational(999, 1000)));
  CHECK_FALSE(verify_threshold(10000, Rational(999, 1000)));
  bool seen = false;
  for (std::int64_t d = 1000000; d <= 400000000; d += 3000000) {
    bool v = verify_threshold(d, Rational(999, 1000));
    if (seen) CHECK(v);
    seen = seen || v;
  }
  CHECK(seen);
}
