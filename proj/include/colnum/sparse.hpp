#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <type_traits>
#include <vector>

namespace colnum {

template <class T>
struct Triplet {
  std::size_t row;
  std::size_t col;
  T value;
};

namespace detail {

template <class T>
bool negligible(const T& v) {
  if constexpr (std::is_floating_point_v<T>) {
    return std::abs(v) < 1e-12;
  } else {
    return v == 0;
  }
}

template <class T>
T magnitude(const T& v) {
  if constexpr (std::is_floating_point_v<T>) {
    return std::abs(v);
  } else {
    return v < 0 ? T(-v) : v;
  }
}

}  // namespace detail

// Solves the square system A z = rhs by Gaussian elimination with Markowitz
// pivoting. Row and column singletons are taken first, so incidence-like
// matrices (two nonzeros per row or column) factor with almost no fill.
// Returns nullopt when A is singular. Works for double and exact rationals.
template <class T>
std::optional<std::vector<T>> sparse_solve(std::size_t n, const std::vector<Triplet<T>>& entries,
                                           std::vector<T> rhs) {
  using Entry = std::pair<std::size_t, T>;
  std::vector<std::vector<Entry>> rows(n);
  std::vector<std::vector<std::size_t>> col_rows(n);
  std::vector<std::size_t> col_deg(n, 0);
  for (const auto& t : entries) {
    auto& r = rows[t.row];
    auto it = std::find_if(r.begin(), r.end(), [&](const Entry& e) { return e.first == t.col; });
    if (it != r.end()) {
      it->second += t.value;
    } else {
      r.push_back({t.col, t.value});
      col_rows[t.col].push_back(t.row);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto& r = rows[i];
    r.erase(std::remove_if(r.begin(), r.end(), [](const Entry& e) { return e.second == T(0); }), r.end());
    for (const auto& e : r) ++col_deg[e.first];
  }

  std::vector<char> row_alive(n, 1), col_alive(n, 1);
  std::vector<std::size_t> row_queue, col_queue;
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() <= 1) row_queue.push_back(i);
    if (col_deg[i] <= 1) col_queue.push_back(i);
  }
  auto row_has = [&](std::size_t i, std::size_t j) -> Entry* {
    for (auto& e : rows[i])
      if (e.first == j) return &e;
    return nullptr;
  };

  std::vector<std::pair<std::size_t, std::size_t>> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pi = n, pj = n;
    while (pi == n && !row_queue.empty()) {
      std::size_t i = row_queue.back();
      row_queue.pop_back();
      if (!row_alive[i]) continue;
      if (rows[i].empty()) return std::nullopt;
      if (rows[i].size() == 1) pi = i, pj = rows[i][0].first;
    }
    while (pi == n && !col_queue.empty()) {
      std::size_t j = col_queue.back();
      col_queue.pop_back();
      if (!col_alive[j]) continue;
      if (col_deg[j] == 0) return std::nullopt;
      if (col_deg[j] != 1) continue;
      for (std::size_t i : col_rows[j])
        if (row_alive[i] && row_has(i, j)) {
          pi = i, pj = j;
          break;
        }
    }
    if (pi == n) {
      // Smallest Markowitz count, larger pivots preferred on ties.
      std::size_t best_cost = static_cast<std::size_t>(-1);
      T best_mag(0);
      for (std::size_t i = 0; i < n; ++i) {
        if (!row_alive[i]) continue;
        for (const auto& e : rows[i]) {
          std::size_t cost = (rows[i].size() - 1) * (col_deg[e.first] - 1);
          T mag = detail::magnitude(e.second);
          if (cost < best_cost || (cost == best_cost && mag > best_mag)) {
            best_cost = cost, best_mag = mag, pi = i, pj = e.first;
          }
        }
        if (best_cost <= 1) break;
      }
      if (pi == n) return std::nullopt;
    }

    Entry* piv = row_has(pi, pj);
    if (!piv || detail::negligible(piv->second)) return std::nullopt;
    const T pv = piv->second;
    row_alive[pi] = 0;
    col_alive[pj] = 0;
    order.push_back({pi, pj});

    for (std::size_t k : col_rows[pj]) {
      if (!row_alive[k]) continue;
      Entry* hit = row_has(k, pj);
      if (!hit) continue;
      T f = hit->second / pv;
      auto& rk = rows[k];
      rk.erase(rk.begin() + (hit - rk.data()));
      for (const auto& e : rows[pi]) {
        if (e.first == pj) continue;
        Entry* at = row_has(k, e.first);
        if (at) {
          at->second -= f * e.second;
          if (at->second == T(0)) {
            rk.erase(rk.begin() + (at - rk.data()));
            if (--col_deg[e.first] == 1) col_queue.push_back(e.first);
          }
        } else {
          rk.push_back({e.first, T(-(f * e.second))});
          col_rows[e.first].push_back(k);
          ++col_deg[e.first];
        }
      }
      rhs[k] -= f * rhs[pi];
      if (rk.size() <= 1) row_queue.push_back(k);
    }
    for (const auto& e : rows[pi]) {
      if (e.first == pj) continue;
      if (--col_deg[e.first] <= 1) col_queue.push_back(e.first);
    }
  }

  std::vector<T> z(n, T(0));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto [i, j] = *it;
    T acc = rhs[i];
    T pv(0);
    for (const auto& e : rows[i]) {
      if (e.first == j)
        pv = e.second;
      else
        acc -= e.second * z[e.first];
    }
    z[j] = acc / pv;
  }
  return z;
}

}  // namespace colnum
