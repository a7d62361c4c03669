#include "colnum/numtheory.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <string>

#include "colnum/constants.hpp"

namespace colnum::nt {

ArithCache::ArithCache(std::int64_t limit) : limit_(limit) {
  if (limit < 1) throw std::invalid_argument("sieve limit must be positive");
  auto n = static_cast<size_t>(limit) + 1;
  phi_.assign(n, 0);
  mu_.assign(n, 0);
  tau_.assign(n, 0);
  spf_.assign(n, 0);
  std::vector<std::int32_t> primes;
  phi_[1] = 1;
  mu_[1] = 1;
  tau_[1] = 1;
  spf_[1] = 1;
  // Linear sieve: every composite is reached once through its smallest prime.
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<std::int32_t>(i);
      primes.push_back(static_cast<std::int32_t>(i));
      phi_[i] = i - 1;
      mu_[i] = -1;
      tau_[i] = 2;
    }
    for (std::int32_t p : primes) {
      std::int64_t ip = i * p;
      if (p > spf_[i] || ip > limit) break;
      spf_[ip] = p;
      if (i % p == 0) {
        phi_[ip] = phi_[i] * p;
        mu_[ip] = 0;
        tau_[ip] = tau_[i];
      } else {
        phi_[ip] = phi_[i] * (p - 1);
        mu_[ip] = static_cast<std::int8_t>(-mu_[i]);
        tau_[ip] = tau_[i] * 2;
      }
    }
  }
}

namespace {

constexpr std::uint32_t kCacheMagic = 0x43544e31;  // "CTN1"

template <class T>
void write_vec(std::ofstream& out, const std::vector<T>& v) {
  out.write(reinterpret_cast<const char*>(v.data()), static_cast<std::streamsize>(v.size() * sizeof(T)));
}

template <class T>
bool read_vec(std::ifstream& in, std::vector<T>& v, size_t n) {
  v.resize(n);
  in.read(reinterpret_cast<char*>(v.data()), static_cast<std::streamsize>(n * sizeof(T)));
  return static_cast<bool>(in);
}

}  // namespace

void ArithCache::save(const std::filesystem::path& file) const {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write sieve cache " + file.string());
  out.write(reinterpret_cast<const char*>(&kCacheMagic), sizeof kCacheMagic);
  out.write(reinterpret_cast<const char*>(&limit_), sizeof limit_);
  write_vec(out, phi_);
  write_vec(out, mu_);
  write_vec(out, tau_);
  write_vec(out, spf_);
}

std::optional<ArithCache> ArithCache::load(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) return std::nullopt;
  std::uint32_t magic = 0;
  ArithCache c{Unfilled{}};
  in.read(reinterpret_cast<char*>(&magic), sizeof magic);
  in.read(reinterpret_cast<char*>(&c.limit_), sizeof c.limit_);
  if (!in || magic != kCacheMagic || c.limit_ < 1) return std::nullopt;
  auto n = static_cast<size_t>(c.limit_) + 1;
  if (!read_vec(in, c.phi_, n) || !read_vec(in, c.mu_, n) || !read_vec(in, c.tau_, n) ||
      !read_vec(in, c.spf_, n))
    return std::nullopt;
  return c;
}

const ArithCache& default_cache() {
  static const ArithCache cache = [] {
    constexpr std::int64_t limit = 1'000'000;
    const char* dir = std::getenv("COLNUM_CACHE_DIR");
    if (dir == nullptr || *dir == '\0') return ArithCache(limit);
    std::filesystem::path file = std::filesystem::path(dir) / ("sieve-" + std::to_string(limit) + ".bin");
    if (auto loaded = ArithCache::load(file); loaded && loaded->limit() == limit) return std::move(*loaded);
    ArithCache built(limit);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (!ec) built.save(file);
    return built;
  }();
  return cache;
}

std::vector<std::int64_t> distinct_primes(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("distinct_primes requires k >= 1");
  std::vector<std::int64_t> out;
  const auto& cache = default_cache();
  if (k <= cache.limit()) {
    auto spf = cache.spf_table();
    while (k > 1) {
      std::int64_t p = spf[static_cast<size_t>(k)];
      out.push_back(p);
      while (k % p == 0) k /= p;
    }
    return out;
  }
  for (std::int64_t p = 2; p * p <= k; ++p) {
    if (k % p != 0) continue;
    out.push_back(p);
    while (k % p == 0) k /= p;
  }
  if (k > 1) out.push_back(k);
  return out;
}

namespace {

void require_positive(std::int64_t k, const char* what) {
  if (k < 1) throw std::invalid_argument(std::string(what) + " requires k >= 1, got " + std::to_string(k));
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

std::int64_t phi(std::int64_t k) {
  require_positive(k, "phi");
  const auto& cache = default_cache();
  if (k <= cache.limit()) return cache.phi_table()[static_cast<size_t>(k)];
  std::int64_t r = k;
  for (std::int64_t p : distinct_primes(k)) r = r / p * (p - 1);
  return r;
}

int mobius(std::int64_t k) {
  require_positive(k, "mobius");
  const auto& cache = default_cache();
  if (k <= cache.limit()) return cache.mu_table()[static_cast<size_t>(k)];
  auto primes = distinct_primes(k);
  std::int64_t rad = 1;
  for (auto p : primes) rad *= p;
  if (rad != k) return 0;
  return primes.size() % 2 == 0 ? 1 : -1;
}

std::int64_t tau_unitary(std::int64_t k) {
  require_positive(k, "tau_unitary");
  const auto& cache = default_cache();
  if (k <= cache.limit()) return cache.tau_table()[static_cast<size_t>(k)];
  return std::int64_t{1} << distinct_primes(k).size();
}

std::int64_t phi_interval(std::int64_t a, std::int64_t b, std::int64_t k) {
  require_positive(k, "phi_interval");
  if (a > b + 1) throw std::invalid_argument("phi_interval requires a <= b + 1");
  if (a == b + 1) return 0;
  auto primes = distinct_primes(k);
  std::int64_t total = 0;
  // Squarefree divisors d of k, enumerated by subsets of the prime support.
  const size_t subsets = size_t{1} << primes.size();
  for (size_t mask = 0; mask < subsets; ++mask) {
    std::int64_t d = 1;
    int sign = 1;
    for (size_t i = 0; i < primes.size(); ++i) {
      if (mask & (size_t{1} << i)) {
        d *= primes[i];
        sign = -sign;
      }
    }
    total += sign * (floor_div(b, d) - floor_div(a - 1, d));
  }
  return total;
}

Rational phi_interval_error(std::int64_t a, std::int64_t b, std::int64_t k) {
  if (a > b) throw std::invalid_argument("phi_interval_error requires a <= b");
  Rational main = make_rational(phi(k), k) * Rational(BigInt(static_cast<long>(b - a)));
  return Rational(BigInt(static_cast<long>(phi_interval(a, b, k)))) - main;
}

std::int64_t sum_phi(std::int64_t x) {
  std::int64_t s = 0;
  for (std::int64_t k = 1; k <= x; ++k) s += phi(k);
  return s;
}

Rational sum_phi_over_k(std::int64_t x) {
  Rational s = 0;
  for (std::int64_t k = 1; k <= x; ++k) s += make_rational(phi(k), k);
  return s;
}

Rational sum_phi_over_k2(std::int64_t x) {
  Rational s = 0;
  for (std::int64_t k = 1; k <= x; ++k) s += make_rational(phi(k), k * k);
  return s;
}

std::int64_t sum_tau(std::int64_t x) {
  std::int64_t s = 0;
  for (std::int64_t k = 1; k <= x; ++k) s += tau_unitary(k);
  return s;
}

namespace {

WindowRow evaluate_row(std::int64_t x, std::int64_t s1, const Rational& s2, const Rational& eps) {
  const auto& pi2 = constants::pi_squared();
  WindowRow row;
  row.x = x;
  row.sum_phi = s1;
  row.sum_phi_over_k = s2;
  Rational xx(BigInt(static_cast<long>(x)));
  Rational lo_factor = 1 - eps;
  Rational hi_factor = 1 + eps;
  Rational sum1(BigInt(static_cast<long>(s1)));
  // (1-eps) 3 x^2 / pi^2 <= S  <=  (1-eps) 3 x^2 <= S pi^2, certified with pi^2_lo.
  row.phi_lower = lo_factor * 3 * xx * xx <= sum1 * pi2.lo;
  row.phi_upper = sum1 * pi2.hi <= hi_factor * 3 * xx * xx;
  row.ratio_lower = lo_factor * 6 * xx <= s2 * pi2.lo;
  row.ratio_upper = s2 * pi2.hi <= hi_factor * 6 * xx;
  return row;
}

}  // namespace

WindowRow window_row(std::int64_t x, const Rational& eps) {
  if (x < 1) throw std::invalid_argument("window_row requires x >= 1");
  if (eps <= 0) throw std::invalid_argument("window_row requires eps > 0");
  return evaluate_row(x, sum_phi(x), sum_phi_over_k(x), eps);
}

bool check_lemma21(std::int64_t x, const Rational& eps) { return window_row(x, eps).pass(); }

std::vector<WindowRow> window_scan(std::int64_t from, std::int64_t to, const Rational& eps) {
  if (from < 1 || to < from) throw std::invalid_argument("window_scan requires 1 <= from <= to");
  if (eps <= 0) throw std::invalid_argument("window_scan requires eps > 0");
  std::vector<WindowRow> rows;
  rows.reserve(static_cast<size_t>(to - from + 1));
  std::int64_t s1 = 0;
  Rational s2 = 0;
  for (std::int64_t x = 1; x <= to; ++x) {
    s1 += phi(x);
    s2 += make_rational(phi(x), x);
    if (x >= from) rows.push_back(evaluate_row(x, s1, s2, eps));
  }
  return rows;
}

namespace {

constexpr mpfr_prec_t kPrec = 192;

// x(log x + 2) <= eps (3/pi^2) x^2 and log x + 3 <= eps (6/pi^2) x.
bool analytic_margins_hold(std::int64_t x, const Rational& eps) {
  Interval xi(Rational(BigInt(static_cast<long>(x))), kPrec);
  Interval lx = log(xi);
  Interval e(eps, kPrec);
  Interval pi2(constants::pi_squared(), kPrec);
  Interval three(Rational(3), kPrec);
  Interval six(Rational(6), kPrec);
  auto a = compare_le(xi * (lx + Interval(Rational(2), kPrec)), e * three / pi2 * xi * xi);
  auto b = compare_le(lx + three, e * six / pi2 * xi);
  return a.value_or(false) && b.value_or(false);
}

}  // namespace

X0Result find_x0(const Rational& eps) {
  if (eps <= 0) throw std::invalid_argument("find_x0 requires eps > 0");
  // Both margin functions are increasing once x > pi^2 / (3 eps); start the
  // crossover search there so that the first success persists.
  Rational start = constants::pi_squared().hi / (3 * eps);
  BigInt s = start.get_num() / start.get_den() + 1;
  if (!s.fits_slong_p()) throw std::invalid_argument("eps too small for find_x0");
  std::int64_t crossover = std::max<std::int64_t>(2, s.get_si());
  while (!analytic_margins_hold(crossover, eps)) ++crossover;

  // Direct check below the crossover: x0 is one past the largest failure.
  // The running ratio sum is carried as an outward-rounded interval.
  const auto& pi2 = constants::pi_squared();
  std::int64_t last_failure = 0;
  std::int64_t s1 = 0;
  Interval s2(Rational(0), kPrec);
  Interval pi2_i(pi2, kPrec);
  for (std::int64_t x = 1; x < crossover; ++x) {
    s1 += phi(x);
    s2 = s2 + Interval(make_rational(phi(x), x), kPrec);
    Rational xx(BigInt(static_cast<long>(x)));
    Rational sum1(BigInt(static_cast<long>(s1)));
    bool ok = (1 - eps) * 3 * xx * xx <= sum1 * pi2.lo && sum1 * pi2.hi <= (1 + eps) * 3 * xx * xx;
    if (ok) {
      Interval lo6(Rational((1 - eps) * 6 * xx), kPrec);
      Interval hi6(Rational((1 + eps) * 6 * xx), kPrec);
      Interval scaled = s2 * pi2_i;
      ok = compare_le(lo6, scaled).value_or(false) && compare_le(scaled, hi6).value_or(false);
    }
    if (!ok) last_failure = x;
  }
  return {last_failure + 1, crossover};
}

namespace {

Interval as_interval(std::int64_t v, mpfr_prec_t p) { return Interval(Rational(BigInt(static_cast<long>(v))), p); }

std::optional<bool> tau_bound(std::int64_t x, std::int64_t st) {
  return decide_le([&](mpfr_prec_t p) {
    Interval xi = as_interval(x, p);
    Interval lx = log(xi);
    Interval rhs = xi / constants::zeta_2(p) * (lx + constants::tau_sum_constant(p)) +
                   as_interval(15, p) * sqrt(xi) * lx;
    return compare_le(as_interval(st, p), rhs);
  });
}

// |value - main| <= bound, both sides certified.
std::optional<bool> abs_within(const Interval& value, const Interval& main, const Interval& bound) {
  Interval diff = value - main;
  auto upper = compare_le(diff, bound);
  auto lower = compare_le(Interval(Rational(0), bound.precision()) - bound, diff);
  if (upper == false || lower == false) return false;
  if (upper && lower) return true;
  return std::nullopt;
}

std::optional<bool> phi_error(std::int64_t x, std::int64_t s1) {
  return decide_le([&](mpfr_prec_t p) {
    Interval xi = as_interval(x, p);
    Interval main = as_interval(3, p) / Interval(constants::pi_squared(), p) * xi * xi;
    Interval bound = xi * (log(xi) + as_interval(2, p));
    return abs_within(as_interval(s1, p), main, bound);
  });
}

std::optional<bool> ratio_error(std::int64_t x, const Rational& s2) {
  return decide_le([&](mpfr_prec_t p) {
    Interval xi = as_interval(x, p);
    Interval main = as_interval(6, p) / Interval(constants::pi_squared(), p) * xi;
    Interval bound = log(xi) + as_interval(3, p);
    return abs_within(Interval(s2, p), main, bound);
  });
}

}  // namespace

std::optional<bool> sum_tau_bound_holds(std::int64_t x) {
  if (x < 1) throw std::invalid_argument("sum_tau_bound_holds requires x >= 1");
  return tau_bound(x, sum_tau(x));
}

std::optional<bool> sum_phi_error_holds(std::int64_t x) {
  if (x < 1) throw std::invalid_argument("sum_phi_error_holds requires x >= 1");
  return phi_error(x, sum_phi(x));
}

std::optional<bool> sum_phi_over_k_error_holds(std::int64_t x) {
  if (x < 1) throw std::invalid_argument("sum_phi_over_k_error_holds requires x >= 1");
  return ratio_error(x, sum_phi_over_k(x));
}

EstimateScan scan_estimates(std::int64_t x_max) {
  if (x_max < 1) throw std::invalid_argument("scan_estimates requires x_max >= 1");
  EstimateScan scan;
  scan.x_max = x_max;
  std::int64_t st = 0;
  std::int64_t s1 = 0;
  Rational s2 = 0;
  for (std::int64_t x = 1; x <= x_max; ++x) {
    st += tau_unitary(x);
    s1 += phi(x);
    s2 += make_rational(phi(x), x);
    auto t = tau_bound(x, st);
    auto a = phi_error(x, s1);
    auto b = ratio_error(x, s2);
    if (!t || !a || !b) scan.undecided.push_back(x);
    if (t == false) scan.tau_failures.push_back(x);
    if (a == false) scan.phi_failures.push_back(x);
    if (b == false) scan.ratio_failures.push_back(x);
  }
  return scan;
}

}  // namespace colnum::nt
