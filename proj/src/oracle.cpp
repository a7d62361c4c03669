#include "colnum/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "colnum/numtheory.hpp"
#include "colnum/reduction.hpp"

namespace colnum::oracle {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}
std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

struct Row {
  std::int64_t a = 1, b = 0;
  bool present() const { return a <= b; }
};

struct Candidate {
  std::int64_t count = 0;
  std::vector<Row> rows;  // trimmed: last row present

  std::int64_t m() const { return static_cast<std::int64_t>(rows.size()); }
  TypedMatrix matrix() const {
    std::vector<std::int64_t> a, b;
    for (const Row& r : rows) a.push_back(r.a), b.push_back(r.b);
    return TypedMatrix(a, b);
  }
};

// True when c should replace best.
bool better(const Candidate& c, const Candidate& best) {
  if (c.count != best.count) return c.count > best.count;
  if (c.m() != best.m()) return c.m() < best.m();
  TypedMatrix x = c.matrix(), y = best.matrix();
  return x.a() != y.a() ? x.a() < y.a() : x.b() < y.b();
}

class Search {
 public:
  Search(std::int64_t delta, std::int64_t m_max, std::int64_t window, bool normalize)
      : D_(delta), m_(m_max), W_(window), normalize_(normalize), rows_(static_cast<size_t>(m_max)) {
    // Row k holds at most floor(D/k) + 1 columns; suffix sums for pruning.
    cap_.assign(static_cast<size_t>(m_ + 2), 0);
    for (std::int64_t k = m_; k >= 1; --k) {
      std::int64_t c = std::min(D_ / k + 1, 2 * W_ + 1);
      cap_[static_cast<size_t>(k)] = cap_[static_cast<size_t>(k + 1)] + c;
    }
  }

  // Explores subtrees whose first row choice has index in the given residue
  // class, so several searches can split the root.
  void run(unsigned part, unsigned parts) {
    part_ = part;
    parts_ = parts;
    dfs(1, 1, false);
  }

  const Candidate& best() const { return best_; }
  std::int64_t nodes() const { return nodes_; }

 private:
  // Interval of j allowed in row k by all present rows below it.
  std::pair<std::int64_t, std::int64_t> range(std::int64_t k) const {
    std::int64_t lo = -W_, hi = W_;
    for (std::int64_t l = 1; l < k; ++l) {
      const Row& r = rows_[static_cast<size_t>(l - 1)];
      if (!r.present()) continue;
      // |l j - k i| <= D for i in [a_l, b_l].
      lo = std::max(lo, ceil_div(k * r.b - D_, l));
      hi = std::min(hi, floor_div(k * r.a + D_, l));
    }
    return {lo, hi};
  }

  void consider(std::int64_t count) {
    Candidate c;
    c.count = count;
    std::int64_t last = 0;
    for (std::int64_t k = 1; k <= m_; ++k)
      if (rows_[static_cast<size_t>(k - 1)].present()) last = k;
    c.rows.assign(rows_.begin(), rows_.begin() + last);
    if (best_.count == 0 || better(c, best_)) best_ = std::move(c);
  }

  void dfs(std::int64_t k, std::int64_t count, bool any_present) {
    ++nodes_;
    if (k > m_) {
      if (any_present) consider(count);
      return;
    }
    if (count + cap_[static_cast<size_t>(k)] < best_.count) return;
    bool root = k == 1;
    unsigned idx = 0;
    auto mine = [&]() { return !root || (idx++ % parts_) == part_; };

    Row& row = rows_[static_cast<size_t>(k - 1)];
    if (k <= D_) {
      auto [lo, hi] = range(k);
      std::int64_t a_lo = lo, a_hi = hi;
      if (normalize_ && !any_present) a_lo = std::max(a_lo, std::int64_t{0}), a_hi = std::min(a_hi, k - 1);
      for (std::int64_t a = a_lo; a <= a_hi; ++a) {
        if (std::gcd(a, k) != 1) continue;
        std::int64_t b_hi = std::min(hi, a + D_ / k);
        std::int64_t cnt = 0;
        for (std::int64_t b = a; b <= b_hi; ++b) {
          if (std::gcd(b, k) != 1) continue;
          ++cnt;
          if (!mine()) continue;
          row = {a, b};
          dfs(k + 1, count + cnt, true);
        }
      }
    }
    row = {};
    if (mine()) dfs(k + 1, count, any_present);
  }

  std::int64_t D_, m_, W_;
  bool normalize_;
  std::vector<Row> rows_;
  std::vector<std::int64_t> cap_;
  Candidate best_;
  std::int64_t nodes_ = 0;
  unsigned part_ = 0, parts_ = 1;
};

}  // namespace

SearchResult best_typed_matrix(const SearchConfig& cfg) {
  if (cfg.delta < 1) throw std::invalid_argument("oracle: Delta must be positive");
  if (cfg.delta > kMaxOracleDelta && !cfg.allow_large)
    throw std::invalid_argument("oracle: Delta above 30 needs an explicit override");
  std::int64_t limit = type_limit(cfg.delta);
  std::int64_t m_max = cfg.m_max == 0 ? limit : cfg.m_max;
  if (m_max < 1 || m_max > limit) throw std::invalid_argument("oracle: m_max must lie in [1, floor(sqrt(pi/2 Delta))]");
  std::int64_t window = cfg.window == 0 ? 2 * cfg.delta : cfg.window;
  if (window < 1) throw std::invalid_argument("oracle: window must be positive");

  unsigned parts = std::max(1u, cfg.jobs);
  std::vector<Search> searches;
  for (unsigned p = 0; p < parts; ++p) searches.emplace_back(cfg.delta, m_max, window, cfg.normalize_a1);
  if (parts == 1) {
    searches[0].run(0, 1);
  } else {
    std::vector<std::thread> threads;
    for (unsigned p = 0; p < parts; ++p) threads.emplace_back([&, p] { searches[p].run(p, parts); });
    for (auto& t : threads) t.join();
  }

  SearchResult res;
  const Candidate* best = nullptr;
  for (const Search& s : searches) {
    res.nodes_explored += s.nodes();
    if (s.best().count == 0) continue;
    if (!best || better(s.best(), *best)) best = &s.best();
  }
  if (!best) throw std::logic_error("oracle: no rank-two matrix in the window");
  res.count = best->count;
  res.witness = best->matrix();
  return res;
}

Rational vertex_enumerate_lp_value(std::int64_t m) {
  if (m < 1 || m > 6) throw std::invalid_argument("vertex enumeration needs 1 <= m <= 6");
  const size_t n = static_cast<size_t>(m);
  // Hyperplanes c.x = r: x_k + x_l = 2/(k l) and x_k = 0.
  struct Plane {
    std::vector<Rational> c;
    Rational r;
    bool bound;  // x_k >= 0 rather than a pair constraint
  };
  std::vector<Plane> planes;
  for (std::int64_t k = 1; k <= m; ++k)
    for (std::int64_t l = k; l <= m; ++l) {
      Plane p{std::vector<Rational>(n, Rational(0)), make_rational(2, k * l), false};
      p.c[static_cast<size_t>(k - 1)] += 1;
      p.c[static_cast<size_t>(l - 1)] += 1;
      planes.push_back(std::move(p));
    }
  for (size_t k = 0; k < n; ++k) {
    Plane p{std::vector<Rational>(n, Rational(0)), Rational(0), true};
    p.c[k] = 1;
    planes.push_back(std::move(p));
  }

  std::vector<Rational> w(n);
  for (size_t k = 0; k < n; ++k) w[k] = nt::phi(static_cast<std::int64_t>(k + 1));

  auto feasible = [&](const std::vector<Rational>& x) {
    for (const Plane& p : planes) {
      Rational s(0);
      for (size_t i = 0; i < n; ++i) s += p.c[i] * x[i];
      if (p.bound ? s < 0 : s > p.r) return false;
    }
    return true;
  };

  std::optional<Rational> best;
  std::vector<size_t> pick(n);
  std::iota(pick.begin(), pick.end(), 0);
  const size_t P = planes.size();
  while (true) {
    // Gauss-Jordan on the chosen rows.
    std::vector<std::vector<Rational>> M(n, std::vector<Rational>(n + 1));
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) M[i][j] = planes[pick[i]].c[j];
      M[i][n] = planes[pick[i]].r;
    }
    bool singular = false;
    for (size_t col = 0; col < n && !singular; ++col) {
      size_t piv = col;
      while (piv < n && M[piv][col] == 0) ++piv;
      if (piv == n) {
        singular = true;
        break;
      }
      std::swap(M[piv], M[col]);
      for (size_t i = 0; i < n; ++i) {
        if (i == col || M[i][col] == 0) continue;
        Rational f = M[i][col] / M[col][col];
        for (size_t j = col; j <= n; ++j) M[i][j] -= f * M[col][j];
      }
    }
    if (!singular) {
      std::vector<Rational> x(n);
      for (size_t i = 0; i < n; ++i) x[i] = M[i][n] / M[i][i];
      if (feasible(x)) {
        Rational v(0);
        for (size_t i = 0; i < n; ++i) v += w[i] * x[i];
        if (!best || v > *best) best = v;
      }
    }
    // Next n-subset in lexicographic order.
    size_t i = n;
    while (i > 0 && pick[i - 1] == P - n + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (size_t j = i; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  return *best;
}

}  // namespace colnum::oracle
