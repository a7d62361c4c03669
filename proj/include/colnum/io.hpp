#pragma once

#include <iosfwd>
#include <vector>

#include "colnum/bounds.hpp"
#include "colnum/casecheck.hpp"
#include "colnum/lp.hpp"
#include "colnum/model.hpp"
#include "colnum/numtheory.hpp"
#include "json.hpp"

namespace colnum::io {

using nlohmann::json;

// Rationals travel as "p/q" strings.
json to_json(const Rational& r);
Rational rational_from_json(const json& j);

// {"m": int, "a": [int], "b": [int]}
json to_json(const TypedMatrix& M);
TypedMatrix typed_matrix_from_json(const json& j);

// [[x, y], ...]
json to_json(const ColumnSet& A);
ColumnSet column_set_from_json(const json& j);

// {"m", "entries": [[k, l, "p/q"]], "objective"}. Symbolic rectangles are
// written as "rectangles": [[k_lo, k_hi, l_lo, l_hi]] with "scale" instead of
// being expanded.
json to_json(const lp::DualCertificate& cert);
lp::DualCertificate certificate_from_json(const json& j);

json to_json(const casecheck::Report& rep);

// m, bound_num, bound_den, solved, eps_num, eps_den, wall_ms. Empty eps
// fields mean no eps. Timing is written as 0 unless with_timing is set.
void write_sweep_csv(std::ostream& out, const bounds::SweepReport& rep, bool with_timing);
// x, lhs1, rhs1, lhs2, rhs2, pass; see README for the columns.
void write_window_csv(std::ostream& out, const std::vector<nt::WindowRow>& rows);

}  // namespace colnum::io
