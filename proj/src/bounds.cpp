#include "colnum/bounds.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "colnum/constants.hpp"
#include "colnum/interval.hpp"
#include "colnum/model.hpp"
#include "colnum/numtheory.hpp"

namespace colnum::bounds {

namespace {

constexpr mpfr_prec_t kPrec = 192;

Interval iv(const Rational& r, mpfr_prec_t p = kPrec) { return Interval(r, p); }
Interval iv(std::int64_t v, mpfr_prec_t p = kPrec) { return Interval(make_rational(v), p); }

BigInt ceil_of(const Rational& r) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

std::int64_t phi_range(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) return 0;
  return nt::sum_phi(hi) - (lo > 1 ? nt::sum_phi(lo - 1) : 0);
}

Rational weighted_range(std::int64_t lo, std::int64_t hi) {
  Rational s;
  for (std::int64_t k = lo; k <= hi; ++k) s += make_rational(nt::phi(k), k);
  return s;
}

}  // namespace

ThreeRanges three_ranges(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("three_ranges requires m >= 1");
  ThreeRanges r;
  r.m = m;
  const __int128 mm = static_cast<__int128>(m) * m;
  while (3 * static_cast<__int128>(r.low_hi + 1) * (r.low_hi + 1) < mm) ++r.low_hi;
  r.mid_hi = r.low_hi;
  while (3 * static_cast<__int128>(r.mid_hi + 1) * (r.mid_hi + 1) < 2 * mm) ++r.mid_hi;
  return r;
}

lp::DualCertificate analytic_certificate(std::int64_t m, const Rational& C) {
  if (m < 4) throw std::invalid_argument("analytic_certificate requires m >= 4");
  if (C <= 0) throw std::invalid_argument("analytic_certificate requires C > 0");
  ThreeRanges r = three_ranges(m);
  lp::DualCertificate cert;
  cert.m = m;
  cert.scale = C;
  cert.rectangles = {{1, r.low_hi, r.mid_hi + 1, m},
                     {r.low_hi + 1, r.mid_hi, r.low_hi + 1, r.mid_hi},
                     {r.mid_hi + 1, m, 1, r.low_hi}};
  cert.objective = analyze_certificate(m, C).objective;
  return cert;
}

AnalyticReport analyze_certificate(std::int64_t m, const Rational& C) {
  if (m < 4) throw std::invalid_argument("analyze_certificate requires m >= 4");
  AnalyticReport rep;
  rep.m = m;
  rep.C = C;
  rep.ranges = three_ranges(m);
  const auto& r = rep.ranges;
  rep.phi_low = phi_range(1, r.low_hi);
  rep.phi_mid = phi_range(r.low_hi + 1, r.mid_hi);
  rep.phi_high = phi_range(r.mid_hi + 1, m);
  rep.low_rows = 2 * C * rep.phi_high >= 1;
  rep.mid_rows = 2 * C * rep.phi_mid >= 1;
  rep.high_rows = 2 * C * rep.phi_low >= 1;
  Rational a_low = weighted_range(1, r.low_hi);
  Rational a_mid = weighted_range(r.low_hi + 1, r.mid_hi);
  Rational a_high = weighted_range(r.mid_hi + 1, m);
  rep.objective = 2 * C * (2 * a_low * a_high + a_mid * a_mid);
  return rep;
}

std::pair<Rational, Rational> c_window(std::int64_t m, const Rational& eps, const Rational& w) {
  if (m < 1) throw std::invalid_argument("c_window requires m >= 1");
  if (eps < 0 || 5 * eps >= 1) throw std::domain_error("c_window requires 0 <= eps < 1/5");
  Interval pi2(constants::pi_squared(), kPrec);
  Interval zeta2 = pi2 / iv(6);
  Interval mm = iv(m) * iv(m);
  Interval e = iv(eps);
  Interval one = iv(1);
  Interval third = one / iv(3);
  Interval lower = zeta2 / mm / (third - iv(5) * e / iv(3));
  Interval beta = sqrt(third);
  Interval gamma = sqrt(iv(2) / iv(3));
  Interval pe = one + e, me = one - e;
  Interval t1 = iv(2) * (pe * beta) * (pe - me * gamma);
  Interval t2 = pe * gamma - me * beta;
  Interval f = t1 + t2 * t2;
  Interval upper = iv(w) / iv(2) * zeta2 * zeta2 / mm / f;
  Rational lo = lower.upper(), hi = upper.lower();
  if (lo > hi) throw std::domain_error("c_window is empty");
  return {lo, hi};
}

bool c_window_applicable(std::int64_t m, const Rational& eps) {
  std::int64_t x0 = nt::find_x0(eps).x0;
  // beta m >= x0  <=>  m^2 >= 3 x0^2
  return static_cast<__int128>(m) * m >= 3 * static_cast<__int128>(x0) * x0;
}

namespace {

SweepReport sweep_part(std::int64_t lo, std::int64_t hi, const Rational& w, const EpsPolicy& policy) {
  SweepReport rep;
  rep.w = w;
  std::optional<Rational> prev;
  for (std::int64_t m = lo; m <= hi; ++m) {
    auto t0 = std::chrono::steady_clock::now();
    SweepRecord rec;
    rec.m = m;
    Rational step = make_rational(nt::phi(m), m * m);
    if (prev && *prev + step <= w) {
      rec.bound = *prev + step;
    } else {
      rec.solved = true;
      ++rep.solves;
      std::optional<Rational> best;
      Rational eps = policy.base / m;
      bool done = false;
      for (int j = 0; j <= policy.max_doublings && !done; ++j, eps *= 2) {
        lp::ApproxDualResult r = lp::solve_approx_dual(m, eps);
        if (r.status != lp::Status::Optimal) continue;
        if (!best || r.value < *best) best = r.value, rec.eps = eps;
        done = r.value <= w;
      }
      if (!done && policy.full_dual_fallback) {
        Rational z = lp::z_value(m);
        if (!best || z < *best) best = z, rec.eps.reset();
      }
      if (!best) throw std::runtime_error("sweep: no bound obtained at m = " + std::to_string(m));
      rec.bound = *best;
    }
    rec.certified = rec.bound <= w;
    if (!rec.certified) rep.failures.push_back(m);
    prev = rec.bound;
    rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    rep.records.push_back(std::move(rec));
  }
  return rep;
}

}  // namespace

SweepReport sweep(std::int64_t m_lo, std::int64_t m_hi, const Rational& w, const EpsPolicy& policy,
                  unsigned jobs) {
  if (m_lo < 4 || m_hi < m_lo) throw std::invalid_argument("sweep requires 4 <= m_lo <= m_hi");
  if (policy.base <= 0 || policy.max_doublings < 0) throw std::invalid_argument("bad eps policy");
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(m_hi - m_lo + 1)));
  nt::default_cache();  // build the shared tables before any thread starts
  if (jobs == 1) return sweep_part(m_lo, m_hi, w, policy);

  std::vector<SweepReport> parts(jobs);
  std::vector<std::thread> threads;
  std::int64_t total = m_hi - m_lo + 1;
  for (unsigned i = 0; i < jobs; ++i) {
    std::int64_t a = m_lo + total * i / jobs;
    std::int64_t b = m_lo + total * (i + 1) / jobs - 1;
    threads.emplace_back([&, i, a, b] { parts[i] = sweep_part(a, b, w, policy); });
  }
  for (auto& t : threads) t.join();
  SweepReport rep;
  rep.w = w;
  for (auto& p : parts) {
    rep.solves += p.solves;
    rep.failures.insert(rep.failures.end(), p.failures.begin(), p.failures.end());
    for (auto& r : p.records) rep.records.push_back(std::move(r));
  }
  return rep;
}

Rational column_bound(std::int64_t m, std::int64_t delta, const Rational& z) {
  if (m < 1) throw std::invalid_argument("column_bound requires m >= 1");
  if (z < 0) throw std::invalid_argument("column_bound requires z >= 0");
  if (m <= 3) return make_rational(delta + 1 + m);
  Interval lm = log(iv(m));
  Interval main = iv(z) * iv(delta) + iv(1) + iv(m) / constants::zeta_2(kPrec) * (lm + constants::tau_sum_constant(kPrec)) +
                  iv(15) * sqrt(iv(m)) * lm;
  return main.upper();
}

Rational exact_error_constant(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("exact_error_constant requires m >= 1");
  Rational total(1);
  for (std::int64_t k = 1; k <= m; ++k) {
    // The error is k-periodic in a and in b - a; one period of each suffices.
    Rational best;
    bool any = false;
    for (std::int64_t a = 0; a < k; ++a) {
      if (std::gcd(a, k) != 1) continue;
      for (std::int64_t b = a; b < a + k; ++b) {
        if (std::gcd(b, k) != 1) continue;
        Rational e = nt::phi_interval_error(a, b, k);
        if (!any || e > best) best = e, any = true;
      }
    }
    total += best;
  }
  return total;
}

Rational column_bound_exact(std::int64_t m, std::int64_t delta, const Rational& z) {
  return z * delta + Rational(ceil_of(exact_error_constant(m)));
}

std::int64_t refined_small_type_bound(std::int64_t m, std::int64_t delta) {
  if (delta < 1) throw std::invalid_argument("refined_small_type_bound requires Delta >= 1");
  switch (m) {
    case 1: return delta + 2;
    case 2: return delta % 2 ? delta + 3 : delta + 2;
    case 3: return g_tilde(delta);
    default: throw std::invalid_argument("refined_small_type_bound requires m in {1, 2, 3}");
  }
}

bool verify_threshold(std::int64_t delta, const Rational& w) {
  if (delta < 1) throw std::invalid_argument("verify_threshold requires Delta >= 1");
  auto test = [&](mpfr_prec_t p) {
    Interval pi = Interval(constants::two_pi(), p) / iv(2, p);
    Interval s = sqrt(pi * iv(delta, p) / iv(2, p));
    Interval ls = log(s);
    Interval lhs = iv(w, p) * iv(delta, p) + iv(1, p) +
                   s / constants::zeta_2(p) * (ls + constants::tau_sum_constant(p)) + iv(15, p) * sqrt(s) * ls;
    return compare_le(lhs, iv(delta, p));
  };
  return decide_le(test).value_or(false);
}

}  // namespace colnum::bounds
