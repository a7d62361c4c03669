#include "colnum/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>

#include "colnum/constants.hpp"
#include "colnum/rational.hpp"

namespace colnum {

namespace {

BigInt floor_of(const Rational& r) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

std::int64_t to_i64(const BigInt& z) {
  if (!z.fits_slong_p()) throw GuardError("integer overflow in reduction bound");
  return z.get_si();
}

// Extended Euclid: returns (g, s, t) with s*p + t*q = g = gcd(p, q) >= 0.
void ext_gcd(std::int64_t p, std::int64_t q, std::int64_t& g, std::int64_t& s, std::int64_t& t) {
  std::int64_t r0 = p, r1 = q, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t k = r0 / r1;
    std::int64_t tmp = r0 - k * r1;
    r0 = r1, r1 = tmp;
    tmp = s0 - k * s1, s0 = s1, s1 = tmp;
    tmp = t0 - k * t1, t0 = t1, t1 = tmp;
  }
  if (r0 < 0) r0 = -r0, s0 = -s0, t0 = -t0;
  g = r0, s = s0, t = t0;
}

}  // namespace

std::int64_t width_in_direction(const ColumnSet& A, Column v) {
  if (v.x == 0 && v.y == 0) throw PreconditionError("direction must be nonzero");
  std::int64_t best = 0;
  for (const Column& c : A.columns()) best = std::max(best, std::abs(v.x * c.x + v.y * c.y));
  return 2 * best;
}

std::int64_t width_squared_limit(std::int64_t delta) {
  return to_i64(floor_of(constants::two_pi().lo * make_rational(delta)));
}

std::int64_t type_limit(std::int64_t delta) {
  // pi/2 = (2 pi)/4
  Rational bound = constants::two_pi().hi * make_rational(delta) / 4;
  std::int64_t m = to_i64(floor_of(bound));
  std::int64_t r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(m)));
  while (r * r > m) --r;
  while ((r + 1) * (r + 1) <= m) ++r;
  return r;
}

ThinDirection find_thin_direction(const ColumnSet& A, std::int64_t delta) {
  if (delta < 1) throw PreconditionError("Delta must be positive");
  const auto& cols = A.columns();
  if (!is_generic(A)) throw PreconditionError("column set is not generic");
  if (!has_rank_two(A)) throw PreconditionError("column set has rank one");
  if (delta_bruteforce(A) > delta) throw PreconditionError("column set has a minor above Delta");

  // Pair with the largest determinant keeps the inverse small.
  Column x1{}, x2{};
  std::int64_t det_best = 0;
  for (size_t i = 0; i < cols.size(); ++i)
    for (size_t j = i + 1; j < cols.size(); ++j) {
      std::int64_t d = std::abs(det(cols[i], cols[j]));
      if (d > det_best) det_best = d, x1 = cols[i], x2 = cols[j];
    }
  // v = X^{-T} c with |c_i| <= width/2 <= sqrt(limit)/2. X^{-T} has rows
  // (x2.y, -x2.x)/det and (-x1.y, x1.x)/det up to sign.
  std::int64_t limit = width_squared_limit(delta);
  std::int64_t half_root = 0;  // ceil(sqrt(limit)) / 2, rounded up
  while (half_root * half_root * 4 < limit) ++half_root;
  std::int64_t row1 = std::abs(x2.y) + std::abs(x1.y);
  std::int64_t row2 = std::abs(x2.x) + std::abs(x1.x);
  Rational norm = make_rational(std::max(row1, row2), det_best);
  std::int64_t R = to_i64(floor_of(norm * make_rational(half_root))) + 1;

  for (std::int64_t r = 1; r <= R; ++r) {
    // Shell ||v||_inf = r, half plane: x > 0, or x = 0 and y > 0.
    auto consider = [&](std::int64_t x, std::int64_t y, ThinDirection& out) {
      if (std::gcd(x, y) != 1) return false;
      std::int64_t w = width_in_direction(A, {x, y});
      if (w * w > limit) return false;
      out = {{x, y}, w};
      return true;
    };
    ThinDirection out;
    if (r == 1 && consider(0, 1, out)) return out;
    for (std::int64_t y = -r; y <= r; ++y)
      if (consider(r, y, out)) return out;
    for (std::int64_t x = 1; x < r; ++x) {
      if (consider(x, r, out)) return out;
      if (consider(x, -r, out)) return out;
    }
  }
  throw GuardError("thin direction search bound exhausted");
}

TypedMatrix reduce(const ColumnSet& A, std::int64_t delta) {
  if (delta < 2) throw PreconditionError("reduction requires Delta >= 2");
  ThinDirection t = find_thin_direction(A, delta);
  std::int64_t p = t.v.x, q = t.v.y;
  std::int64_t g, s, u;
  ext_gcd(p, q, g, s, u);
  if (g != 1) throw GuardError("thin direction is not primitive");
  // U = [[p, q], [-u, s]], det = p*s + q*u = 1.
  std::int64_t r2 = -u, s2 = s;
  if (p * s2 - q * r2 != 1) throw GuardError("unimodular completion failed");

  std::int64_t m_cap = type_limit(delta);
  std::vector<Column> out;
  out.reserve(A.size() + 1);
  for (const Column& c : A.columns()) {
    Column y{p * c.x + q * c.y, r2 * c.x + s2 * c.y};
    if (y.x < 0 || (y.x == 0 && y.y < 0)) y = {-y.x, -y.y};
    std::int64_t d = std::gcd(y.x, y.y);
    if (d == 0) throw PreconditionError("zero column");
    y = {y.x / d, y.y / d};
    out.push_back(y);
  }
  out.push_back({0, 1});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());

  std::int64_t m = out.back().x;
  if (m < 1) throw GuardError("reduced set has rank one");
  if (m > m_cap) throw GuardError("reduced type exceeds sqrt(pi Delta / 2)");
  std::vector<std::int64_t> a(static_cast<size_t>(m), 1), b(static_cast<size_t>(m), 0);
  std::vector<bool> seen(static_cast<size_t>(m), false);
  for (const Column& c : out) {
    if (c.x == 0) continue;
    auto i = static_cast<size_t>(c.x - 1);
    if (!seen[i]) a[i] = b[i] = c.y, seen[i] = true;
    a[i] = std::min(a[i], c.y);
    b[i] = std::max(b[i], c.y);
  }
  TypedMatrix M(std::move(a), std::move(b));
  if (column_count(M) < static_cast<std::int64_t>(A.size())) throw GuardError("reduction lost columns");
  if (delta_endpoints(M) > delta) throw GuardError("reduced matrix exceeds Delta");
  return M;
}

}  // namespace colnum
