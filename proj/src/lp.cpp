#include "colnum/lp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "colnum/numtheory.hpp"

namespace colnum::lp {

std::string status_name(Status s) {
  switch (s) {
    case Status::Optimal: return "optimal";
    case Status::Infeasible: return "infeasible";
    case Status::Unbounded: return "unbounded";
  }
  return "?";
}

std::string key_name(const VarKey& key) {
  if (key.l == 0) return "x" + std::to_string(key.k);
  return "Y" + std::to_string(key.k) + "," + std::to_string(key.l);
}

std::size_t RationalLP::add_variable(VarKey key, Rational objective) {
  if (index_.count(key)) throw std::invalid_argument("variable added twice: " + key_name(key));
  index_[key] = keys_.size();
  keys_.push_back(key);
  objective_.push_back(std::move(objective));
  return keys_.size() - 1;
}

std::optional<std::size_t> RationalLP::find(const VarKey& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool RationalLP::add_constraint(std::vector<Term> terms, Relation rel, Rational rhs) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.var < b.var; });
  std::vector<Term> merged;
  for (auto& t : terms) {
    if (t.var >= keys_.size()) throw std::invalid_argument("constraint uses an unknown variable");
    if (!merged.empty() && merged.back().var == t.var)
      merged.back().coef += t.coef;
    else
      merged.push_back(std::move(t));
  }
  std::erase_if(merged, [](const Term& t) { return t.coef == 0; });
  std::string sig = rel == Relation::Le ? "<=" : ">=";
  sig += to_string(rhs);
  for (const auto& t : merged) sig += "|" + std::to_string(t.var) + ":" + to_string(t.coef);
  if (!seen_.insert(sig).second) return false;
  constraints_.push_back({std::move(merged), rel, std::move(rhs)});
  return true;
}

std::vector<std::size_t> RationalLP::empty_constraints() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < constraints_.size(); ++i)
    if (constraints_[i].terms.empty()) out.push_back(i);
  return out;
}

RationalLP build_primal(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("build_primal requires m >= 1");
  RationalLP lp(Sense::Max);
  for (std::int64_t k = 1; k <= m; ++k) lp.add_variable({k, 0}, make_rational(nt::phi(k)));
  for (std::int64_t k = 1; k <= m; ++k)
    for (std::int64_t l = k; l <= m; ++l) {
      auto i = static_cast<std::size_t>(k - 1), j = static_cast<std::size_t>(l - 1);
      lp.add_constraint({{i, Rational(1)}, {j, Rational(1)}}, Relation::Le, make_rational(2, k * l));
    }
  return lp;
}

RationalLP build_dual(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("build_dual requires m >= 1");
  RationalLP lp(Sense::Min);
  for (std::int64_t k = 1; k <= m; ++k)
    for (std::int64_t l = 1; l <= m; ++l) lp.add_variable({k, l}, make_rational(2, k * l));
  for (std::int64_t k = 1; k <= m; ++k) {
    std::vector<Term> terms;
    for (std::int64_t l = 1; l <= m; ++l) {
      terms.push_back({*lp.find({k, l}), Rational(1)});
      terms.push_back({*lp.find({l, k}), Rational(1)});
    }
    lp.add_constraint(std::move(terms), Relation::Ge, make_rational(nt::phi(k)));
  }
  return lp;
}

namespace {

using i128 = __int128;

void eps_parts(const Rational& eps, i128& p, i128& q) {
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  if (!eps.get_num().fits_slong_p() || !eps.get_den().fits_slong_p())
    throw std::invalid_argument("eps numerator or denominator too large");
  p = eps.get_num().get_si();
  q = eps.get_den().get_si();
}

}  // namespace

std::vector<std::pair<std::int64_t, std::int64_t>> approx_support(std::int64_t m, const Rational& eps) {
  if (m < 1) throw std::invalid_argument("approx_support requires m >= 1");
  i128 p, q;
  eps_parts(eps, p, q);
  const i128 mm = static_cast<i128>(m) * m;
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t k = 1; 2 * static_cast<i128>(k) * k <= mm; ++k) {
    const i128 kk = static_cast<i128>(k) * k;
    auto above_lower = [&](i128 l) { return q * (kk + l * l) >= (q - p) * mm; };
    auto below_upper = [&](i128 l) { return q * (kk + l * l) <= (q + p) * mm; };
    // Start near the lower edge of the annulus and walk.
    double lo_guess = (1.0 - eps.get_d()) * static_cast<double>(m) * static_cast<double>(m) -
                      static_cast<double>(k) * static_cast<double>(k);
    auto l = static_cast<std::int64_t>(lo_guess > 0 ? std::sqrt(lo_guess) : 1.0);
    l = std::clamp<std::int64_t>(l, 1, m);
    while (l > 1 && above_lower(l - 1)) --l;
    while (l <= m && !above_lower(l)) ++l;
    for (; l <= m && below_upper(l); ++l) out.push_back({k, l});
  }
  return out;
}

std::vector<std::int64_t> approx_uncovered(std::int64_t m, const Rational& eps) {
  std::vector<char> hit(static_cast<std::size_t>(m + 1), 0);
  for (auto [k, l] : approx_support(m, eps)) hit[static_cast<std::size_t>(k)] = hit[static_cast<std::size_t>(l)] = 1;
  std::vector<std::int64_t> out;
  for (std::int64_t k = 1; k <= m; ++k)
    if (!hit[static_cast<std::size_t>(k)]) out.push_back(k);
  return out;
}

RationalLP build_approx_dual(std::int64_t m, const Rational& eps) {
  if (m < 2) throw std::invalid_argument("build_approx_dual requires m >= 2");
  RationalLP lp(Sense::Min);
  auto S = approx_support(m, eps);
  std::vector<std::vector<Term>> rows(static_cast<std::size_t>(m + 1));
  for (auto [k, l] : S) {
    std::size_t v = lp.add_variable({k, l}, make_rational(2, k * l));
    rows[static_cast<std::size_t>(k)].push_back({v, Rational(1)});
    rows[static_cast<std::size_t>(l)].push_back({v, Rational(1)});
  }
  for (std::int64_t k = 1; k <= m; ++k)
    lp.add_constraint(std::move(rows[static_cast<std::size_t>(k)]), Relation::Ge, make_rational(nt::phi(k)));
  return lp;
}

// ---------------------------------------------------------------------------
// Dense tableau simplex.

namespace {

struct Tableau {
  std::vector<std::vector<Rational>> rows;  // last entry is the right-hand side
  std::vector<std::size_t> basis;
  std::size_t cols = 0;
  std::size_t pivots = 0;

  void pivot(std::size_t r, std::size_t c) {
    auto& pr = rows[r];
    Rational pv = pr[c];
    for (auto& v : pr)
      if (v != 0) v /= pv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      auto& ri = rows[i];
      for (std::size_t j = 0; j <= cols; ++j)
        if (pr[j] != 0) ri[j] -= f * pr[j];
    }
    basis[r] = c;
    ++pivots;
  }

  // Maximizes cost . x over the current tableau with Bland's rule; columns
  // with allowed[j] == 0 never enter. Returns false when unbounded.
  bool optimize(const std::vector<Rational>& cost, const std::vector<char>& allowed) {
    for (;;) {
      // reduced cost d_j = c_j - sum_r c_{basis[r]} a_rj
      std::size_t enter = cols;
      for (std::size_t j = 0; j < cols && enter == cols; ++j) {
        if (!allowed[j]) continue;
        Rational d = cost[j];
        for (std::size_t r = 0; r < rows.size(); ++r)
          if (rows[r][j] != 0 && cost[basis[r]] != 0) d -= cost[basis[r]] * rows[r][j];
        if (d > 0) enter = j;
      }
      if (enter == cols) return true;
      std::size_t leave = rows.size();
      Rational best;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r][enter] <= 0) continue;
        Rational ratio = rows[r][cols] / rows[r][enter];
        if (leave == rows.size() || ratio < best || (ratio == best && basis[r] < basis[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave == rows.size()) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpSolution solve(const RationalLP& lp) {
  const std::size_t n = lp.num_variables();
  const auto& cons = lp.constraints();
  std::size_t n_slack = 0, n_art = 0;
  std::vector<int> sign(cons.size(), 1);
  std::vector<Relation> rel(cons.size());
  for (std::size_t i = 0; i < cons.size(); ++i) {
    rel[i] = cons[i].rel;
    if (cons[i].rhs < 0) {
      sign[i] = -1;
      rel[i] = rel[i] == Relation::Le ? Relation::Ge : Relation::Le;
    }
    ++n_slack;
    if (rel[i] == Relation::Ge) ++n_art;
  }
  Tableau t;
  t.cols = n + n_slack + n_art;
  std::size_t slack = n, art = n + n_slack;
  for (std::size_t i = 0; i < cons.size(); ++i) {
    std::vector<Rational> row(t.cols + 1);
    for (const auto& term : cons[i].terms) row[term.var] = sign[i] * term.coef;
    row[t.cols] = sign[i] * cons[i].rhs;
    if (rel[i] == Relation::Le) {
      row[slack] = 1;
      t.basis.push_back(slack);
    } else {
      row[slack] = -1;
      row[art] = 1;
      t.basis.push_back(art++);
    }
    ++slack;
    t.rows.push_back(std::move(row));
  }

  LpSolution sol;
  std::vector<char> allowed(t.cols, 1);
  if (n_art > 0) {
    std::vector<Rational> phase1(t.cols);
    for (std::size_t j = n + n_slack; j < t.cols; ++j) phase1[j] = -1;
    t.optimize(phase1, allowed);
    Rational infeas;
    for (std::size_t r = 0; r < t.rows.size(); ++r)
      if (t.basis[r] >= n + n_slack) infeas += t.rows[r][t.cols];
    if (infeas > 0) {
      sol.status = Status::Infeasible;
      sol.pivots = t.pivots;
      return sol;
    }
    // Pivot zero-level artificials out; drop rows that are redundant.
    for (std::size_t r = 0; r < t.rows.size();) {
      if (t.basis[r] < n + n_slack) {
        ++r;
        continue;
      }
      std::size_t c = 0;
      while (c < n + n_slack && t.rows[r][c] == 0) ++c;
      if (c < n + n_slack) {
        t.pivot(r, c);
        ++r;
      } else {
        t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(r));
        t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(r));
      }
    }
    for (std::size_t j = n + n_slack; j < t.cols; ++j) allowed[j] = 0;
  }

  std::vector<Rational> cost(t.cols);
  for (std::size_t j = 0; j < n; ++j) cost[j] = lp.sense() == Sense::Max ? lp.objective()[j] : Rational(-lp.objective()[j]);
  bool bounded = t.optimize(cost, allowed);
  sol.pivots = t.pivots;
  if (!bounded) {
    sol.status = Status::Unbounded;
    return sol;
  }
  sol.status = Status::Optimal;
  sol.assignment.assign(n, Rational(0));
  for (std::size_t r = 0; r < t.rows.size(); ++r)
    if (t.basis[r] < n) sol.assignment[t.basis[r]] = t.rows[r][t.cols];
  for (std::size_t j = 0; j < n; ++j) sol.value += lp.objective()[j] * sol.assignment[j];
  return sol;
}

// ---------------------------------------------------------------------------
// Certificates.

Rational certificate_objective(const DualCertificate& cert) {
  Rational obj;
  for (const auto& [kl, v] : cert.entries) obj += v * make_rational(2, kl.first * kl.second);
  auto weighted = [](std::int64_t lo, std::int64_t hi) {
    Rational s;
    for (std::int64_t k = lo; k <= hi; ++k) s += make_rational(nt::phi(k), k);
    return s;
  };
  for (const Rectangle& r : cert.rectangles)
    obj += 2 * cert.scale * weighted(r.k_lo, r.k_hi) * weighted(r.l_lo, r.l_hi);
  return obj;
}

namespace {

bool indices_ok(const DualCertificate& cert) {
  if (cert.m < 1) return false;
  for (const auto& [kl, v] : cert.entries) {
    if (kl.first < 1 || kl.first > cert.m || kl.second < 1 || kl.second > cert.m) return false;
    if (v < 0) return false;
  }
  for (const Rectangle& r : cert.rectangles) {
    bool empty = r.k_lo > r.k_hi || r.l_lo > r.l_hi;
    if (empty) continue;
    if (r.k_lo < 1 || r.k_hi > cert.m || r.l_lo < 1 || r.l_hi > cert.m) return false;
  }
  if (!cert.rectangles.empty() && cert.scale < 0) return false;
  return true;
}

bool rows_cover(const DualCertificate& cert, const std::vector<Rational>& row) {
  for (std::int64_t k = 1; k <= cert.m; ++k)
    if (row[static_cast<std::size_t>(k)] < nt::phi(k)) return false;
  return true;
}

}  // namespace

bool check_dual_feasible(const DualCertificate& cert) {
  if (!indices_ok(cert)) return false;
  std::vector<Rational> row(static_cast<std::size_t>(cert.m + 1));
  for (const auto& [kl, v] : cert.entries) {
    row[static_cast<std::size_t>(kl.first)] += v;
    row[static_cast<std::size_t>(kl.second)] += v;
  }
  for (const Rectangle& r : cert.rectangles) {
    if (r.k_lo > r.k_hi || r.l_lo > r.l_hi) continue;
    std::int64_t phi_k = 0, phi_l = 0;
    for (std::int64_t k = r.k_lo; k <= r.k_hi; ++k) phi_k += nt::phi(k);
    for (std::int64_t l = r.l_lo; l <= r.l_hi; ++l) phi_l += nt::phi(l);
    // Row k collects C phi(k) phi(l) over the l-range, and symmetrically.
    for (std::int64_t k = r.k_lo; k <= r.k_hi; ++k)
      row[static_cast<std::size_t>(k)] += cert.scale * nt::phi(k) * phi_l;
    for (std::int64_t l = r.l_lo; l <= r.l_hi; ++l)
      row[static_cast<std::size_t>(l)] += cert.scale * nt::phi(l) * phi_k;
  }
  return rows_cover(cert, row) && certificate_objective(cert) == cert.objective;
}

bool check_dual_feasible_streaming(const DualCertificate& cert) {
  if (!indices_ok(cert)) return false;
  std::vector<Rational> row(static_cast<std::size_t>(cert.m + 1));
  // Group the objective by the denominator k l to keep additions cheap.
  std::map<std::int64_t, Rational> by_kl;
  bool negative = false;
  cert.for_each_entry([&](std::int64_t k, std::int64_t l, const Rational& v) {
    if (v < 0) negative = true;
    row[static_cast<std::size_t>(k)] += v;
    row[static_cast<std::size_t>(l)] += v;
    by_kl[k * l] += v;
  });
  if (negative) return false;
  Rational obj;
  for (const auto& [kl, v] : by_kl) obj += 2 * v / kl;
  return rows_cover(cert, row) && obj == cert.objective;
}

DualCertificate certificate_from_dual(std::int64_t m, const RationalLP& dual, const LpSolution& sol) {
  if (sol.status != Status::Optimal) throw std::invalid_argument("certificate needs an optimal dual solution");
  DualCertificate cert;
  cert.m = m;
  for (std::size_t j = 0; j < dual.num_variables(); ++j) {
    const Rational& v = sol.assignment[j];
    if (v == 0) continue;
    const VarKey& key = dual.keys()[j];
    cert.entries[{key.k, key.l}] += v;
  }
  cert.objective = certificate_objective(cert);
  return cert;
}

}  // namespace colnum::lp
