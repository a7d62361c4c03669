#pragma once

#include <compare>
#include <cstdint>
#include <string_view>
#include <vector>

namespace colnum {

struct Column {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend auto operator<=>(const Column&, const Column&) = default;
};

inline std::int64_t det(const Column& u, const Column& v) { return u.x * v.y - u.y * v.x; }

// A finite set of integer columns, kept sorted. Duplicates are rejected.
class ColumnSet {
 public:
  ColumnSet() = default;
  explicit ColumnSet(std::vector<Column> columns);

  const std::vector<Column>& columns() const { return columns_; }
  size_t size() const { return columns_.size(); }
  bool contains(const Column& c) const;
  friend bool operator==(const ColumnSet&, const ColumnSet&) = default;

 private:
  std::vector<Column> columns_;
};

// The canonical matrix M(a, b) of type m: the column (0, 1) together with
// every (k, j), 1 <= k <= m, a_k <= j <= b_k, gcd(j, k) = 1. Rows with
// a_k > b_k are absent; the canonical absent encoding is a_k = 1, b_k = 0.
class TypedMatrix {
 public:
  TypedMatrix(std::vector<std::int64_t> a, std::vector<std::int64_t> b);

  std::int64_t m() const { return static_cast<std::int64_t>(a_.size()); }
  const std::vector<std::int64_t>& a() const { return a_; }
  const std::vector<std::int64_t>& b() const { return b_; }
  // 1-based row accessors.
  std::int64_t a(std::int64_t k) const { return a_[static_cast<size_t>(k - 1)]; }
  std::int64_t b(std::int64_t k) const { return b_[static_cast<size_t>(k - 1)]; }

  friend bool operator==(const TypedMatrix&, const TypedMatrix&) = default;
  friend auto operator<=>(const TypedMatrix&, const TypedMatrix&) = default;

 private:
  std::vector<std::int64_t> a_;
  std::vector<std::int64_t> b_;
};

// Tightens every a_k up and b_k down to the nearest value coprime to k and
// rewrites rows without columns as (1, 0). The column set is unchanged.
TypedMatrix normalize(const TypedMatrix& M);

// Rows k with at least one column (k, j).
std::vector<std::int64_t> present_rows(const TypedMatrix& M);

ColumnSet enumerate_columns(const TypedMatrix& M);
std::int64_t column_count(const TypedMatrix& M);

// Largest |det| over column pairs, read from row endpoints only. Throws
// std::domain_error when no row is present (rank one).
std::int64_t delta_endpoints(const TypedMatrix& M);

// Largest |det| over all pairs of columns; O(n^2).
std::int64_t delta_bruteforce(const ColumnSet& A);
// No two columns are linearly dependent.
bool is_generic(const ColumnSet& A);
// Some pair of columns is linearly independent.
bool has_rank_two(const ColumnSet& A);

enum class Family { F1, F2, F3 };
Family parse_family(std::string_view name);
std::string_view family_name(Family f);

// Extremal constructions with Delta + 2, + 3, + 4 columns respectively.
// F2 needs Delta odd, F3 needs Delta = 12s + 2 or 12s + 8 with s >= 1.
TypedMatrix family(Family kind, std::int64_t delta);

// The type-3 matrices with Delta + 4 columns for Delta = 2 mod 6:
// a = (0, (Delta+1)/3, a3), b = ((Delta+a3)/3, (Delta+2 a3-1)/3, Delta).
TypedMatrix type3_extremal(std::int64_t delta, std::int64_t a3);

// Type-2 matrix with Delta + 2 columns for Delta = 4n:
// a = (0, 2n - 1), b = (3n - 1, 4n - 1).
TypedMatrix type2_extremal(std::int64_t delta);

// 2 floor((Delta+5)/6) + 2 floor((Delta+1)/3) + 2.
std::int64_t g_tilde(std::int64_t delta);
// The residue-class form: Delta + 4, + 3 or + 2 by Delta mod 6.
std::int64_t g_tilde_by_cases(std::int64_t delta);

}  // namespace colnum
