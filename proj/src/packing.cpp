// Revised simplex for pair packing problems
//   max sum w_v x_v  s.t.  x_u + x_v <= c_e (2 x_u <= c_e for loops), x >= 0.
// The origin is feasible, so there is no phase one. In any basis the rows
// whose slack is nonbasic ("tight" edges) and the basic vertices form a
// square system with at most two nonzeros per row, which sparse_solve
// handles in near linear time. The basis is found in double precision and
// then re-solved exactly; if the exact check fails the simplex continues in
// rational arithmetic with Bland's rule.

#include <cmath>
#include <stdexcept>

#include "colnum/lp.hpp"
#include "colnum/sparse.hpp"

namespace colnum::lp {

namespace {

struct Graph {
  std::size_t n = 0;
  std::vector<std::size_t> eu, ev;  // endpoints, 0-based
  std::vector<std::vector<std::size_t>> incident;
};

struct Basis {
  std::vector<char> x;  // vertex is basic
  std::vector<char> s;  // slack of edge is basic
};

template <class T>
struct Snapshot {
  std::vector<std::size_t> tight, basic;    // row e / column v order
  std::vector<std::size_t> row_of, col_of;  // inverse maps, npos when absent
  std::vector<Triplet<T>> m;
};

constexpr std::size_t npos = static_cast<std::size_t>(-1);

template <class T>
Snapshot<T> snapshot(const Graph& g, const Basis& b) {
  Snapshot<T> s;
  s.row_of.assign(g.eu.size(), npos);
  s.col_of.assign(g.n, npos);
  for (std::size_t e = 0; e < g.eu.size(); ++e)
    if (!b.s[e]) s.row_of[e] = s.tight.size(), s.tight.push_back(e);
  for (std::size_t v = 0; v < g.n; ++v)
    if (b.x[v]) s.col_of[v] = s.basic.size(), s.basic.push_back(v);
  for (std::size_t r = 0; r < s.tight.size(); ++r) {
    std::size_t e = s.tight[r];
    std::size_t u = g.eu[e], v = g.ev[e];
    if (u == v) {
      if (b.x[u]) s.m.push_back({r, s.col_of[u], T(2)});
    } else {
      if (b.x[u]) s.m.push_back({r, s.col_of[u], T(1)});
      if (b.x[v]) s.m.push_back({r, s.col_of[v], T(1)});
    }
  }
  return s;
}

template <class T>
std::vector<Triplet<T>> transposed(const std::vector<Triplet<T>>& m) {
  std::vector<Triplet<T>> t;
  t.reserve(m.size());
  for (const auto& e : m) t.push_back({e.col, e.row, e.value});
  return t;
}

// Coefficient of x_v in the row of edge e.
inline int mult(const Graph& g, std::size_t e, std::size_t v) {
  if (g.eu[e] == v && g.ev[e] == v) return 2;
  return (g.eu[e] == v || g.ev[e] == v) ? 1 : 0;
}

template <class T>
struct Point {
  std::vector<T> x;  // all vertices
  std::vector<T> s;  // all slacks
  std::vector<T> y;  // all edges, zero off the tight set
};

template <class T>
std::optional<Point<T>> evaluate(const Graph& g, const Basis& b, const Snapshot<T>& snap,
                                 const std::vector<T>& w, const std::vector<T>& cap) {
  const std::size_t k = snap.tight.size();
  std::vector<T> rhs(k), obj(k);
  for (std::size_t r = 0; r < k; ++r) rhs[r] = cap[snap.tight[r]];
  for (std::size_t c = 0; c < k; ++c) obj[c] = w[snap.basic[c]];
  auto xb = sparse_solve<T>(k, snap.m, std::move(rhs));
  if (!xb) return std::nullopt;
  auto yt = sparse_solve<T>(k, transposed(snap.m), std::move(obj));
  if (!yt) return std::nullopt;
  Point<T> p;
  p.x.assign(g.n, T(0));
  p.y.assign(g.eu.size(), T(0));
  p.s.assign(g.eu.size(), T(0));
  for (std::size_t c = 0; c < k; ++c) p.x[snap.basic[c]] = (*xb)[c];
  for (std::size_t r = 0; r < k; ++r) p.y[snap.tight[r]] = (*yt)[r];
  for (std::size_t e = 0; e < g.eu.size(); ++e) {
    if (!b.s[e]) continue;
    std::size_t u = g.eu[e], v = g.ev[e];
    T used = (u == v) ? T(2 * p.x[u]) : T(p.x[u] + p.x[v]);
    p.s[e] = cap[e] - used;
  }
  return p;
}

template <class T>
T reduced_cost_x(const Graph& g, const Point<T>& p, const std::vector<T>& w, std::size_t v) {
  T rc = w[v];
  for (std::size_t e : g.incident[v]) rc -= T(mult(g, e, v)) * p.y[e];
  return rc;
}

template <class T>
bool positive(const T& v, const T& scale) {
  if constexpr (std::is_floating_point_v<T>) {
    return v > 1e-9 * (1.0 + std::abs(scale));
  } else {
    (void)scale;
    return v > 0;
  }
}

enum class Outcome { Optimal, Unbounded, Singular, Stalled };

// Runs the simplex from basis b. Entering index: vertices 0..n-1, then
// slacks n..n+E-1. Double mode uses Dantzig pricing with a Bland fallback
// on long degenerate runs; exact mode always uses Bland.
template <class T>
Outcome run_simplex(const Graph& g, Basis& b, const std::vector<T>& w, const std::vector<T>& cap,
                    std::size_t& pivots, std::size_t max_pivots) {
  constexpr bool exact = !std::is_floating_point_v<T>;
  const std::size_t n = g.n, E = g.eu.size();
  std::size_t stall = 0;
  T last_obj(0);
  for (;;) {
    if (pivots >= max_pivots) return Outcome::Stalled;
    Snapshot<T> snap = snapshot<T>(g, b);
    auto pt = evaluate<T>(g, b, snap, w, cap);
    if (!pt) return Outcome::Singular;
    const Point<T>& p = *pt;

    T obj(0);
    for (std::size_t v : snap.basic) obj += w[v] * p.x[v];
    if constexpr (!exact) {
      stall = (obj > last_obj + 1e-12 * (1.0 + std::abs(obj))) ? 0 : stall + 1;
    }
    last_obj = obj;
    const bool bland = exact || stall > 50;

    std::size_t enter = npos;
    T best(0);
    for (std::size_t v = 0; v < n && !(bland && enter != npos); ++v) {
      if (b.x[v]) continue;
      T rc = reduced_cost_x(g, p, w, v);
      if (positive(rc, w[v]) && (enter == npos || rc > best)) enter = v, best = rc;
    }
    for (std::size_t e = 0; e < E && !(bland && enter != npos); ++e) {
      if (b.s[e]) continue;
      T rc = -p.y[e];
      if (positive(rc, T(1)) && (enter == npos || rc > best)) enter = n + e, best = rc;
    }
    if (enter == npos) return Outcome::Optimal;

    // Direction: B d = a_enter, split into tight rows and basic slacks.
    const std::size_t k = snap.tight.size();
    std::vector<T> a(k, T(0));
    if (enter < n) {
      for (std::size_t e : g.incident[enter])
        if (snap.row_of[e] != npos) a[snap.row_of[e]] = T(mult(g, e, enter));
    } else {
      a[snap.row_of[enter - n]] = T(1);
    }
    auto dx = sparse_solve<T>(k, snap.m, std::move(a));
    if (!dx) return Outcome::Singular;

    std::size_t leave = npos;
    T ratio(0);
    auto consider = [&](std::size_t index, const T& value, const T& d) {
      bool pos;
      if constexpr (exact) {
        pos = d > 0;
      } else {
        pos = d > 1e-11;
      }
      if (!pos) return;
      T r = value / d;
      if constexpr (!exact) {
        if (r < 0) r = 0;
      }
      if (leave == npos || r < ratio || (r == ratio && index < leave)) leave = index, ratio = r;
    };
    for (std::size_t c = 0; c < k; ++c) consider(snap.basic[c], p.x[snap.basic[c]], (*dx)[c]);
    for (std::size_t e = 0; e < E; ++e) {
      if (!b.s[e]) continue;
      std::size_t u = g.eu[e], v = g.ev[e];
      T d(0);
      if (enter < n) d = T(mult(g, e, enter));
      if (u == v) {
        if (b.x[u]) d -= T(2) * (*dx)[snap.col_of[u]];
      } else {
        if (b.x[u]) d -= (*dx)[snap.col_of[u]];
        if (b.x[v]) d -= (*dx)[snap.col_of[v]];
      }
      consider(n + e, p.s[e], d);
    }
    if (leave == npos) return Outcome::Unbounded;

    if (enter < n) b.x[enter] = 1; else b.s[enter - n] = 1;
    if (leave < n) b.x[leave] = 0; else b.s[leave - n] = 0;
    ++pivots;
  }
}

// Exact optimality of basis b; fills the result on success.
bool certify(const Graph& g, const Basis& b, const std::vector<Rational>& w,
             const std::vector<Rational>& cap, PackingResult& out) {
  Snapshot<Rational> snap = snapshot<Rational>(g, b);
  auto pt = evaluate<Rational>(g, b, snap, w, cap);
  if (!pt) return false;
  const auto& p = *pt;
  for (std::size_t v = 0; v < g.n; ++v) {
    if (p.x[v] < 0) return false;
    if (!b.x[v] && reduced_cost_x(g, p, w, v) > 0) return false;
  }
  for (std::size_t e = 0; e < g.eu.size(); ++e) {
    if (b.s[e] && p.s[e] < 0) return false;
    if (p.y[e] < 0) return false;
  }
  Rational primal, dual;
  for (std::size_t v = 0; v < g.n; ++v) primal += w[v] * p.x[v];
  for (std::size_t e = 0; e < g.eu.size(); ++e) dual += cap[e] * p.y[e];
  if (primal != dual) throw std::logic_error("pair packing: primal and dual values differ at a certified basis");
  out.value = primal;
  out.x.assign(g.n + 1, Rational(0));
  for (std::size_t v = 0; v < g.n; ++v) out.x[v + 1] = p.x[v];
  out.y = p.y;
  return true;
}

}  // namespace

PackingResult solve_pair_packing(std::int64_t n, const std::vector<Rational>& weights,
                                 const std::vector<PackingEdge>& edges) {
  if (n < 1) throw std::invalid_argument("pair packing needs at least one vertex");
  if (weights.size() != static_cast<std::size_t>(n + 1)) throw std::invalid_argument("weights are indexed 1..n");
  Graph g;
  g.n = static_cast<std::size_t>(n);
  g.incident.resize(g.n);
  std::vector<Rational> cap;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& ed = edges[e];
    if (ed.u < 1 || ed.v > n || ed.u > ed.v) throw std::invalid_argument("edge endpoints must satisfy 1 <= u <= v <= n");
    if (ed.cap <= 0) throw std::invalid_argument("edge capacities must be positive");
    g.eu.push_back(static_cast<std::size_t>(ed.u - 1));
    g.ev.push_back(static_cast<std::size_t>(ed.v - 1));
    g.incident[g.eu.back()].push_back(e);
    if (ed.u != ed.v) g.incident[g.ev.back()].push_back(e);
    cap.push_back(ed.cap);
  }
  std::vector<Rational> w(weights.begin() + 1, weights.end());
  PackingResult out;
  // A positive weight on an isolated vertex makes the problem unbounded.
  for (std::size_t v = 0; v < g.n; ++v)
    if (g.incident[v].empty() && w[v] > 0) {
      out.status = Status::Unbounded;
      return out;
    }

  std::vector<double> wd, capd;
  for (const auto& v : w) wd.push_back(v.get_d());
  for (const auto& c : cap) capd.push_back(c.get_d());

  Basis b{std::vector<char>(g.n, 0), std::vector<char>(g.eu.size(), 1)};
  Basis start = b;
  std::size_t pivots = 0;
  Outcome fo = run_simplex<double>(g, b, wd, capd, pivots, 50 * (g.n + g.eu.size()) + 1000);
  out.float_pivots = pivots;
  if (fo == Outcome::Optimal && certify(g, b, w, cap, out)) {
    out.certified_from_float = true;
    return out;
  }
  // Continue exactly, from the float basis when it is exactly primal
  // feasible and otherwise from the slack basis.
  Basis eb = start;
  if (fo == Outcome::Optimal) {
    auto snap = snapshot<Rational>(g, b);
    if (auto pt = evaluate<Rational>(g, b, snap, w, cap)) {
      bool feasible = true;
      for (std::size_t v = 0; v < g.n; ++v) feasible = feasible && pt->x[v] >= 0;
      for (std::size_t e = 0; e < g.eu.size(); ++e) feasible = feasible && (!b.s[e] || pt->s[e] >= 0);
      if (feasible) eb = b;
    }
  }
  std::size_t exact_pivots = 0;
  Outcome eo = run_simplex<Rational>(g, eb, w, cap, exact_pivots, static_cast<std::size_t>(-1));
  out.exact_pivots = exact_pivots;
  if (eo == Outcome::Unbounded) {
    out.status = Status::Unbounded;
    return out;
  }
  if (eo != Outcome::Optimal || !certify(g, eb, w, cap, out))
    throw std::logic_error("pair packing: exact simplex ended without a certified optimum");
  return out;
}

std::vector<PackingEdge> support_edges(std::int64_t m, const Rational& eps) {
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  std::vector<PackingEdge> out;
  for (auto [k, l] : approx_support(m, eps)) {
    std::int64_t u = std::min(k, l), v = std::max(k, l);
    if (seen.insert({u, v}).second) out.push_back({u, v, make_rational(2, u * v)});
  }
  return out;
}

namespace {

std::vector<Rational> phi_weights(std::int64_t m) {
  std::vector<Rational> w(static_cast<std::size_t>(m + 1));
  for (std::int64_t k = 1; k <= m; ++k) w[static_cast<std::size_t>(k)] = make_rational(nt::phi(k));
  return w;
}

}  // namespace

ApproxDualResult solve_approx_dual(std::int64_t m, const Rational& eps) {
  if (m < 2) throw std::invalid_argument("approximate dual requires m >= 2");
  ApproxDualResult res;
  res.variables = approx_support(m, eps).size();
  if (!approx_uncovered(m, eps).empty()) {
    res.status = Status::Infeasible;
    return res;
  }
  auto edges = support_edges(m, eps);
  PackingResult pr = solve_pair_packing(m, phi_weights(m), edges);
  if (pr.status != Status::Optimal) throw std::logic_error("approximate dual: packing side not optimal");
  res.status = Status::Optimal;
  res.value = pr.value;
  res.certificate.m = m;
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (pr.y[e] != 0) res.certificate.entries[{edges[e].u, edges[e].v}] = pr.y[e];
  res.certificate.objective = certificate_objective(res.certificate);
  return res;
}

Rational z_value(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("z_value requires m >= 1");
  std::vector<PackingEdge> edges;
  for (std::int64_t k = 1; k <= m; ++k)
    for (std::int64_t l = k; l <= m; ++l) edges.push_back({k, l, make_rational(2, k * l)});
  return solve_pair_packing(m, phi_weights(m), edges).value;
}

}  // namespace colnum::lp
