#include "colnum/model.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

#include "colnum/numtheory.hpp"

namespace colnum {

ColumnSet::ColumnSet(std::vector<Column> columns) : columns_(std::move(columns)) {
  std::sort(columns_.begin(), columns_.end());
  if (std::adjacent_find(columns_.begin(), columns_.end()) != columns_.end())
    throw std::invalid_argument("column set contains repeated columns");
}

bool ColumnSet::contains(const Column& c) const {
  return std::binary_search(columns_.begin(), columns_.end(), c);
}

TypedMatrix::TypedMatrix(std::vector<std::int64_t> a, std::vector<std::int64_t> b)
    : a_(std::move(a)), b_(std::move(b)) {
  if (a_.empty()) throw std::invalid_argument("a typed matrix needs m >= 1");
  if (a_.size() != b_.size()) throw std::invalid_argument("endpoint sequences differ in length");
}

TypedMatrix normalize(const TypedMatrix& M) {
  std::vector<std::int64_t> a = M.a();
  std::vector<std::int64_t> b = M.b();
  for (std::int64_t k = 1; k <= M.m(); ++k) {
    auto i = static_cast<size_t>(k - 1);
    std::int64_t lo = a[i];
    std::int64_t hi = b[i];
    while (lo <= hi && std::gcd(lo, k) != 1) ++lo;
    while (hi >= lo && std::gcd(hi, k) != 1) --hi;
    if (lo > hi) {
      a[i] = 1;
      b[i] = 0;
    } else {
      a[i] = lo;
      b[i] = hi;
    }
  }
  return TypedMatrix(std::move(a), std::move(b));
}

std::vector<std::int64_t> present_rows(const TypedMatrix& M) {
  std::vector<std::int64_t> rows;
  for (std::int64_t k = 1; k <= M.m(); ++k)
    if (M.a(k) <= M.b(k) && nt::phi_interval(M.a(k), M.b(k), k) > 0) rows.push_back(k);
  return rows;
}

ColumnSet enumerate_columns(const TypedMatrix& M) {
  std::vector<Column> cols{{0, 1}};
  for (std::int64_t k = 1; k <= M.m(); ++k)
    for (std::int64_t j = M.a(k); j <= M.b(k); ++j)
      if (std::gcd(j, k) == 1) cols.push_back({k, j});
  return ColumnSet(std::move(cols));
}

std::int64_t column_count(const TypedMatrix& M) {
  std::int64_t n = 1;
  for (std::int64_t k = 1; k <= M.m(); ++k)
    if (M.a(k) <= M.b(k)) n += nt::phi_interval(M.a(k), M.b(k), k);
  return n;
}

std::int64_t delta_endpoints(const TypedMatrix& M) {
  TypedMatrix N = normalize(M);
  std::vector<std::int64_t> rows = present_rows(N);
  if (rows.empty()) throw std::domain_error("delta_endpoints: matrix has rank one");
  std::int64_t best = 0;
  for (std::int64_t k : rows) {
    best = std::max(best, k);  // against (0, 1)
    for (std::int64_t l : rows) {
      if (l < k) continue;
      best = std::max({best, k * N.b(l) - l * N.a(k), l * N.b(k) - k * N.a(l)});
    }
  }
  return best;
}

std::int64_t delta_bruteforce(const ColumnSet& A) {
  const auto& c = A.columns();
  std::int64_t best = 0;
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = i + 1; j < c.size(); ++j) best = std::max(best, std::abs(det(c[i], c[j])));
  return best;
}

bool is_generic(const ColumnSet& A) {
  const auto& c = A.columns();
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = i + 1; j < c.size(); ++j)
      if (det(c[i], c[j]) == 0) return false;
  return true;
}

bool has_rank_two(const ColumnSet& A) {
  const auto& c = A.columns();
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = i + 1; j < c.size(); ++j)
      if (det(c[i], c[j]) != 0) return true;
  return false;
}

Family parse_family(std::string_view name) {
  if (name == "F1") return Family::F1;
  if (name == "F2") return Family::F2;
  if (name == "F3") return Family::F3;
  throw std::invalid_argument("unknown family: " + std::string(name));
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::F1: return "F1";
    case Family::F2: return "F2";
    case Family::F3: return "F3";
  }
  return "?";
}

TypedMatrix family(Family kind, std::int64_t delta) {
  if (delta < 1) throw std::invalid_argument("family requires Delta >= 1");
  switch (kind) {
    case Family::F1:
      return TypedMatrix({0}, {delta});
    case Family::F2:
      if (delta % 2 == 0) throw std::invalid_argument("family F2 requires Delta odd");
      return TypedMatrix({0, delta}, {delta, delta});
    case Family::F3: {
      std::int64_t s = delta / 12;
      if (s >= 1 && delta % 12 == 2)
        return TypedMatrix({0, 4 * s + 1, 9 * s + 1}, {7 * s + 1, 10 * s + 1, 12 * s + 2});
      if (s >= 1 && delta % 12 == 8)
        return TypedMatrix({0, 4 * s + 3, 9 * s + 7}, {7 * s + 5, 10 * s + 7, 12 * s + 8});
      throw std::invalid_argument("family F3 requires Delta = 12s+2 or 12s+8 with s >= 1");
    }
  }
  throw std::invalid_argument("unknown family");
}

TypedMatrix type3_extremal(std::int64_t delta, std::int64_t a3) {
  if (delta < 1 || delta % 6 != 2) throw std::invalid_argument("type3_extremal requires Delta = 2 mod 6");
  if (((a3 % 3) + 3) % 3 != 1) throw std::invalid_argument("type3_extremal requires a3 = 1 mod 3");
  if (3 * a3 < 2 * delta || 4 * a3 > 3 * delta + 4)
    throw std::invalid_argument("type3_extremal requires 2 Delta / 3 <= a3 <= 3 Delta / 4 + 1");
  if ((delta + a3) % 3 != 0 || (delta + 2 * a3 - 1) % 3 != 0 || (delta + 1) % 3 != 0)
    throw std::invalid_argument("type3_extremal endpoints are not integral");
  return TypedMatrix({0, (delta + 1) / 3, a3}, {(delta + a3) / 3, (delta + 2 * a3 - 1) / 3, delta});
}

TypedMatrix type2_extremal(std::int64_t delta) {
  if (delta < 4 || delta % 4 != 0) throw std::invalid_argument("type2_extremal requires Delta = 4n");
  std::int64_t n = delta / 4;
  return TypedMatrix({0, 2 * n - 1}, {3 * n - 1, 4 * n - 1});
}

std::int64_t g_tilde(std::int64_t delta) {
  if (delta < 1) throw std::invalid_argument("g_tilde requires Delta >= 1");
  return 2 * ((delta + 5) / 6) + 2 * ((delta + 1) / 3) + 2;
}

std::int64_t g_tilde_by_cases(std::int64_t delta) {
  if (delta < 1) throw std::invalid_argument("g_tilde requires Delta >= 1");
  switch (delta % 6) {
    case 2: return delta + 4;
    case 1:
    case 3:
    case 5: return delta + 3;
    default: return delta + 2;
  }
}

}  // namespace colnum
