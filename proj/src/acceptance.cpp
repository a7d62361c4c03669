#include "colnum/acceptance.hpp"

#include <chrono>
#include <cstdlib>
#include <random>
#include <sstream>

#include "colnum/bounds.hpp"
#include "colnum/casecheck.hpp"
#include "colnum/lp.hpp"
#include "colnum/model.hpp"
#include "colnum/numtheory.hpp"
#include "colnum/oracle.hpp"
#include "colnum/reduction.hpp"

namespace colnum::acceptance {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

template <class T>
std::string join(const std::vector<T>& v, std::size_t cap = 10) {
  std::ostringstream s;
  for (std::size_t i = 0; i < v.size() && i < cap; ++i) s << (i ? "," : "") << v[i];
  if (v.size() > cap) s << ",...";
  return s.str();
}

Outcome exact_lp_values() {
  Outcome o{1, "exact LP values z_1..z_3 = 1, z_5 = 119/120"};
  o.passed = true;
  std::ostringstream d;
  for (std::int64_t m : {1, 2, 3, 5}) {
    auto t = Clock::now();
    Rational v = lp::solve(lp::build_primal(m)).value;
    double s = since(t);
    Rational want = m == 5 ? make_rational(119, 120) : make_rational(1);
    if (v != want || s >= 1.0) o.passed = false;
    d << "z" << m << "=" << to_string(v) << " ";
  }
  o.detail = d.str();
  return o;
}

Outcome vertex_oracle() {
  Outcome o{2, "vertex enumeration equals simplex for m = 1..6"};
  o.passed = true;
  std::ostringstream d;
  for (std::int64_t m = 1; m <= 6; ++m) {
    Rational a = oracle::vertex_enumerate_lp_value(m), b = lp::solve(lp::build_primal(m)).value;
    if (a != b) o.passed = false;
    if (m == 4 && (a != make_rational(35, 36) || b != make_rational(35, 36))) o.passed = false;
    d << "z" << m << "=" << to_string(a) << " ";
  }
  o.detail = d.str();
  return o;
}

Outcome sweep_check(const Options& opt) {
  Outcome o{3, "sweep certifies z_m <= 999/1000"};
  Rational w = make_rational(999, 1000);
  auto t = Clock::now();
  bounds::SweepReport r = bounds::sweep(4, 500, w, {}, opt.jobs);
  double s = since(t);
  o.passed = r.passed() && s < 600;
  std::ostringstream d;
  d << "4..500: " << (r.passed() ? "ok" : "failures " + join(r.failures)) << " solves " << r.solves;
  if (opt.extended_sweep) {
    bounds::SweepReport e = bounds::sweep(4, 3257, w, {}, opt.jobs);
    o.passed = o.passed && e.passed();
    d << "; 4..3257: " << (e.passed() ? "ok" : "failures " + join(e.failures)) << " solves " << e.solves;
  }
  o.detail = d.str();
  return o;
}

Outcome analytic() {
  Outcome o{4, "analytic certificate at m = 3257, C = 4.96/m^2"};
  const std::int64_t m = 3257;
  Rational C = make_rational(496, 100) / Rational(m * m);
  bounds::AnalyticReport rep = bounds::analyze_certificate(m, C);
  lp::DualCertificate cert = bounds::analytic_certificate(m, C);
  bool checked = lp::check_dual_feasible(cert);
  auto [lo, hi] = bounds::c_window(m, make_rational(1, 1000), make_rational(999, 1000));
  bool window = lo <= hi && lo <= C && C <= hi;
  o.passed = rep.feasible() && checked && rep.objective <= make_rational(999, 1000) && window;
  o.detail = "objective ~" + to_decimal(rep.objective, 8) + " window*m^2 ~[" + to_decimal(lo * m * m, 6) + ", " +
             to_decimal(hi * m * m, 6) + "]";
  return o;
}

Outcome number_theory() {
  Outcome o{5, "totient and divisor-sum estimates"};
  std::vector<std::int64_t> window_fail;
  for (const auto& row : nt::window_scan(1880, 5000, make_rational(1, 1000)))
    if (!row.pass()) window_fail.push_back(row.x);
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<std::int64_t> kd(1, 10'000), ad(-100'000, 100'000);
  int err_fail = 0;
  for (int i = 0; i < 1000; ++i) {
    std::int64_t k = kd(rng), a = ad(rng), b = ad(rng);
    if (a > b) std::swap(a, b);
    if (abs(nt::phi_interval_error(a, b, k)) > nt::tau_unitary(k)) ++err_fail;
  }
  nt::EstimateScan scan = nt::scan_estimates(10'000);
  o.passed = window_fail.empty() && err_fail == 0 && scan.tau_failures.empty() && scan.phi_failures.empty() &&
             scan.ratio_failures.empty() && scan.undecided.empty();
  std::ostringstream d;
  d << "window x in [1880,5000] failures {" << join(window_fail) << "}; error-term violations " << err_fail
    << "; tau-sum bound failures {" << join(scan.tau_failures) << "}; phi-sum failures {" << join(scan.phi_failures)
    << "}; phi/k-sum failures {" << join(scan.ratio_failures) << "}; undecided {" << join(scan.undecided) << "}";
  o.detail = d.str();
  return o;
}

Outcome families() {
  Outcome o{6, "families F1/F2/F3 for Delta <= 200"};
  std::vector<std::string> bad;
  auto verify = [&](Family f, std::int64_t d, std::int64_t extra) {
    TypedMatrix M = family(f, d);
    ColumnSet cols = enumerate_columns(M);
    bool ok = column_count(M) == d + extra && delta_endpoints(M) == d && is_generic(cols);
    if (!ok) bad.push_back(std::string(family_name(f)) + "@" + std::to_string(d));
  };
  for (std::int64_t d = 1; d <= 200; ++d) verify(Family::F1, d, 2);
  for (std::int64_t d = 1; d <= 199; d += 2) verify(Family::F2, d, 3);
  for (std::int64_t d = 14; d <= 200; ++d)
    if (d % 12 == 2 || d % 12 == 8) verify(Family::F3, d, 4);
  o.passed = bad.empty();
  o.detail = bad.empty() ? "all counts, deltas and genericity as expected" : "mismatch at " + join(bad);
  return o;
}

Outcome case_checks() {
  Outcome o{7, "small-type residue systems"};
  auto t2 = casecheck::check_type2();
  auto t3 = casecheck::check_type3(3);
  auto t4 = casecheck::check_type3(4);
  auto relaxed = casecheck::check_type3(4, {.admit_delta_2 = true});
  bool case23 = relaxed.solutions_found > 0 &&
                static_cast<std::size_t>(relaxed.solutions_found) == relaxed.witnesses.size();
  for (const auto& w : relaxed.witnesses) {
    const auto& v = w.values;
    case23 = case23 && v.at("e1") == 0 && v.at("e2") == 0 && v.at("e3") == 1 && v.at("e4") == 1 &&
             v.at("a3") % 3 == 1 && v.at("b3") % 3 == 2;
  }
  o.passed = t2.solutions_found == 0 && t3.solutions_found == 0 && t4.solutions_found == 0 && case23;
  std::ostringstream d;
  d << "type2 " << t2.solutions_found << "/" << t2.assignments_tested << ", type3 d=3 " << t3.solutions_found << "/"
    << t3.assignments_tested << ", d=4 " << t4.solutions_found << "/" << t4.assignments_tested
    << ", d=4 with Delta=2 mod 6: " << relaxed.solutions_found << " solutions"
    << (case23 ? " all e=(0,0,1,1), (a3,b3)=(1,2) mod 3" : " outside the expected configuration");
  o.detail = d.str();
  return o;
}

Outcome reduction_check() {
  Outcome o{8, "reduction on 200 transformed family matrices"};
  std::mt19937_64 rng(7031);
  std::uniform_int_distribution<std::int64_t> ent(-10, 10), dd(2, 120), pick(0, 2);
  std::bernoulli_distribution flip(0.5);
  int failures = 0, by_family[3] = {0, 0, 0};
  std::string first_error;
  for (int trial = 0; trial < 200; ++trial) {
    Family f = static_cast<Family>(pick(rng));
    std::int64_t d = dd(rng);
    if (f == Family::F2 && d % 2 == 0) ++d;
    if (f == Family::F3) d = 12 * (1 + d % 9) + (flip(rng) ? 2 : 8);
    ++by_family[static_cast<int>(f)];
    std::int64_t u11, u12, u21, u22;
    do {
      u11 = ent(rng), u12 = ent(rng), u21 = ent(rng), u22 = ent(rng);
    } while (std::abs(u11 * u22 - u12 * u21) != 1);
    std::vector<Column> cols;
    ColumnSet source = enumerate_columns(family(f, d));
    for (const Column& c : source.columns()) {
      Column v{u11 * c.x + u12 * c.y, u21 * c.x + u22 * c.y};
      cols.push_back(flip(rng) ? Column{-v.x, -v.y} : v);
    }
    ColumnSet A(cols);
    try {
      TypedMatrix M = reduce(A, d);
      if (column_count(M) < static_cast<std::int64_t>(A.size()) || delta_endpoints(M) > d || M.m() > type_limit(d))
        ++failures;
    } catch (const std::exception& e) {
      ++failures;
      if (first_error.empty()) first_error = std::string(family_name(f)) + "@" + std::to_string(d) + ": " + e.what();
    }
  }
  o.passed = failures == 0;
  o.detail = std::to_string(failures) + " failures (F1 " + std::to_string(by_family[0]) + ", F2 " +
             std::to_string(by_family[1]) + ", F3 " + std::to_string(by_family[2]) + " trials)" +
             (first_error.empty() ? "" : "; first: " + first_error);
  return o;
}

Outcome threshold() {
  Outcome o{9, "threshold inequality"};
  bool big = bounds::verify_threshold(100'000'000, make_rational(999, 1000));
  bool small = bounds::verify_threshold(10'000, make_rational(999, 1000));
  o.passed = big && !small;
  o.detail = std::string("Delta=10^8: ") + (big ? "true" : "false") + ", Delta=10^4: " + (small ? "true" : "false");
  return o;
}

Outcome small_delta(unsigned jobs) {
  Outcome o{10, "oracle within [g_tilde, refined bounds] for Delta = 2..12"};
  std::vector<std::string> bad;
  for (std::int64_t d = 2; d <= 12; ++d) {
    std::int64_t limit = type_limit(d);
    oracle::SearchResult full = oracle::best_typed_matrix({.delta = d, .jobs = jobs});
    Rational upper(0);
    for (std::int64_t m = 1; m <= limit; ++m) {
      Rational b = m <= 3 ? make_rational(bounds::refined_small_type_bound(m, d))
                          : bounds::column_bound_exact(m, d, lp::z_value(m));
      if (b > upper) upper = b;
    }
    oracle::SearchResult three =
        oracle::best_typed_matrix({.delta = d, .m_max = std::min<std::int64_t>(3, limit), .jobs = jobs});
    if (full.count < g_tilde(d) || Rational(full.count) > upper)
      bad.push_back("Delta=" + std::to_string(d) + " count " + std::to_string(full.count) + " vs [" +
                    std::to_string(g_tilde(d)) + ", " + to_string(upper) + "]");
    if (three.count > g_tilde(d)) bad.push_back("Delta=" + std::to_string(d) + " m<=3 count " + std::to_string(three.count));
  }
  o.passed = bad.empty();
  o.detail = bad.empty() ? "all in range" : join(bad);
  return o;
}

}  // namespace

std::vector<Outcome> run_all(const Options& opt, const std::function<void(const Outcome&)>& on_result) {
  std::vector<std::function<Outcome()>> steps = {
      exact_lp_values, vertex_oracle,   [&] { return sweep_check(opt); }, analytic,  number_theory,
      families,        case_checks,     reduction_check,                  threshold, [&] { return small_delta(opt.jobs); },
  };
  std::vector<Outcome> out;
  for (auto& step : steps) {
    auto t = Clock::now();
    Outcome o;
    try {
      o = step();
    } catch (const std::exception& e) {
      o.id = static_cast<int>(out.size()) + 1;
      o.name = "criterion " + std::to_string(o.id);
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    o.seconds = since(t);
    if (on_result) on_result(o);
    out.push_back(std::move(o));
  }
  return out;
}

std::string format(const Outcome& o) {
  std::ostringstream s;
  s << (o.passed ? "PASS " : "FAIL ") << o.id << " " << o.name << ": " << o.detail;
  return s.str();
}

}  // namespace colnum::acceptance
