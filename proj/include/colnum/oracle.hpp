#pragma once

#include <cstdint>

#include "colnum/model.hpp"
#include "colnum/rational.hpp"

namespace colnum::oracle {

struct SearchConfig {
  std::int64_t delta = 1;
  std::int64_t m_max = 0;   // 0: floor(sqrt(pi/2 Delta))
  std::int64_t window = 0;  // 0: 2 Delta; bounds |a_k|, |b_k|
  bool normalize_a1 = true;
  bool allow_large = false;  // lift the Delta <= 30 limit
  unsigned jobs = 1;
};

struct SearchResult {
  TypedMatrix witness{{1}, {0}};
  std::int64_t count = 0;
  std::int64_t nodes_explored = 0;
};

inline constexpr std::int64_t kMaxOracleDelta = 30;

// Largest column_count over Delta-submodular typed matrices of type at most
// m_max with endpoints in [-W, W]. Rows are enumerated in normalized form
// (endpoints coprime to k). With normalize_a1 the smallest present row k0 has
// a_{k0} in [0, k0), which is a_1 = 0 when row 1 is present. Ties go to the
// smallest (m, a, b). Only M(a, b) matrices are searched; the result is a
// lower bound for g(Delta, 2), not a claim that it equals it.
SearchResult best_typed_matrix(const SearchConfig& cfg);

// Value of (P_m) from every basic feasible point; m <= 6.
Rational vertex_enumerate_lp_value(std::int64_t m);

}  // namespace colnum::oracle
