#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "colnum/numtheory.hpp"
#include "colnum/rational.hpp"

namespace colnum::lp {

enum class Sense { Max, Min };
enum class Relation { Le, Ge };
enum class Status { Optimal, Infeasible, Unbounded };

std::string status_name(Status s);

// x_k is {k, 0}; Y_{k,l} is {k, l}.
struct VarKey {
  std::int64_t k = 0;
  std::int64_t l = 0;
  friend auto operator<=>(const VarKey&, const VarKey&) = default;
};
std::string key_name(const VarKey& key);

struct Term {
  std::size_t var;
  Rational coef;
};

struct Constraint {
  std::vector<Term> terms;  // sorted by variable, no zero coefficients
  Relation rel;
  Rational rhs;
};

// max or min c.x subject to the constraints and x >= 0.
class RationalLP {
 public:
  explicit RationalLP(Sense sense) : sense_(sense) {}

  std::size_t add_variable(VarKey key, Rational objective);
  // Repeated variables are merged and zero terms dropped. A constraint equal
  // to an earlier one is ignored; the return value says whether it was new.
  bool add_constraint(std::vector<Term> terms, Relation rel, Rational rhs);

  Sense sense() const { return sense_; }
  std::size_t num_variables() const { return keys_.size(); }
  const std::vector<VarKey>& keys() const { return keys_; }
  const std::vector<Rational>& objective() const { return objective_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  std::optional<std::size_t> find(const VarKey& key) const;

  // Constraints with no variables, e.g. a dual row whose support is empty.
  std::vector<std::size_t> empty_constraints() const;

 private:
  Sense sense_;
  std::vector<VarKey> keys_;
  std::vector<Rational> objective_;
  std::map<VarKey, std::size_t> index_;
  std::vector<Constraint> constraints_;
  std::set<std::string> seen_;
};

struct LpSolution {
  Status status = Status::Infeasible;
  Rational value;
  std::vector<Rational> assignment;  // indexed like RationalLP::keys()
  std::size_t pivots = 0;
};

// max sum phi(k) x_k, x_k + x_l <= 2/(k l) for 1 <= k <= l <= m, x >= 0.
RationalLP build_primal(std::int64_t m);
// min sum 2/(k l) Y_{k,l}, sum_l (Y_{k,l} + Y_{l,k}) >= phi(k), Y >= 0.
RationalLP build_dual(std::int64_t m);

// Pairs (k, l) with 1 <= k, 2k^2 <= m^2, (1-eps) m^2 <= k^2 + l^2 <= (1+eps) m^2
// and 1 <= l <= m, in lexicographic order. All tests are exact.
std::vector<std::pair<std::int64_t, std::int64_t>> approx_support(std::int64_t m, const Rational& eps);
// Rows k in [1, m] that no pair of the support touches.
std::vector<std::int64_t> approx_uncovered(std::int64_t m, const Rational& eps);
// The dual restricted to the support. Uncovered rows become empty
// constraints 0 >= phi(k), visible through empty_constraints().
RationalLP build_approx_dual(std::int64_t m, const Rational& eps);

// Exact two-phase dense tableau simplex with Bland's rule.
LpSolution solve(const RationalLP& lp);

// A nonnegative matrix Y for (D_m). Stored sparsely, or symbolically as
// rectangles on which Y_{k,l} = C phi(k) phi(l).
struct Rectangle {
  std::int64_t k_lo, k_hi, l_lo, l_hi;  // inclusive; empty when lo > hi
};
struct DualCertificate {
  std::int64_t m = 0;
  std::map<std::pair<std::int64_t, std::int64_t>, Rational> entries;
  std::vector<Rectangle> rectangles;
  Rational scale;  // C for the rectangles
  Rational objective;

  // Visits the sparse entries, then every rectangle cell. Rectangle cells
  // are produced on the fly and never stored; overlaps are visited twice.
  template <class F>
  void for_each_entry(F&& f) const;
};

// Rows sums for (D_m) and the objective, recomputed exactly.
Rational certificate_objective(const DualCertificate& cert);
// True iff all entries are nonnegative with indices in [1, m]^2, every row
// constraint of (D_m) holds and the stored objective is the true one.
bool check_dual_feasible(const DualCertificate& cert);
// The same check by iterating every entry of the expanded matrix.
bool check_dual_feasible_streaming(const DualCertificate& cert);

DualCertificate certificate_from_dual(std::int64_t m, const RationalLP& dual, const LpSolution& sol);

// Pair packing: max sum w_v x_v subject to x_u + x_v <= cap_e per edge
// (2 x_u <= cap_e for a loop), x >= 0. Vertices are 1..n.
struct PackingEdge {
  std::int64_t u;
  std::int64_t v;  // u <= v
  Rational cap;
};
struct PackingResult {
  Status status = Status::Optimal;
  Rational value;
  std::vector<Rational> x;  // index 0 unused
  std::vector<Rational> y;  // edge duals, same order as the edges
  std::size_t float_pivots = 0;
  std::size_t exact_pivots = 0;
  bool certified_from_float = false;
};
PackingResult solve_pair_packing(std::int64_t n, const std::vector<Rational>& weights,
                                 const std::vector<PackingEdge>& edges);

// Edges {k, l} of the support with caps 2/(k l), deduplicated.
std::vector<PackingEdge> support_edges(std::int64_t m, const Rational& eps);
// (D-hat_m) through pair packing: value and the optimal Y as a certificate.
struct ApproxDualResult {
  Status status = Status::Infeasible;
  Rational value;
  DualCertificate certificate;
  std::size_t variables = 0;
};
ApproxDualResult solve_approx_dual(std::int64_t m, const Rational& eps);
// z_m through pair packing on the complete graph with loops.
Rational z_value(std::int64_t m);

template <class F>
void DualCertificate::for_each_entry(F&& f) const {
  for (const auto& [kl, v] : entries) f(kl.first, kl.second, v);
  if (rectangles.empty()) return;
  for (const Rectangle& r : rectangles)
    for (std::int64_t k = r.k_lo; k <= r.k_hi; ++k) {
      Rational row = scale * nt::phi(k);
      for (std::int64_t l = r.l_lo; l <= r.l_hi; ++l) f(k, l, Rational(row * nt::phi(l)));
    }
}

}  // namespace colnum::lp
