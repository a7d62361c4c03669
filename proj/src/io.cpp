#include "colnum/io.hpp"

#include <ostream>
#include <stdexcept>

#include "colnum/constants.hpp"

namespace colnum::io {

json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return make_rational(j.get<std::int64_t>());
  throw std::invalid_argument("expected a rational as \"p/q\"");
}

json to_json(const TypedMatrix& M) { return {{"m", M.m()}, {"a", M.a()}, {"b", M.b()}}; }

TypedMatrix typed_matrix_from_json(const json& j) {
  TypedMatrix M(j.at("a").get<std::vector<std::int64_t>>(), j.at("b").get<std::vector<std::int64_t>>());
  if (j.contains("m") && j.at("m").get<std::int64_t>() != M.m())
    throw std::invalid_argument("typed matrix: m does not match the endpoint lists");
  return M;
}

json to_json(const ColumnSet& A) {
  json out = json::array();
  for (const Column& c : A.columns()) out.push_back({c.x, c.y});
  return out;
}

ColumnSet column_set_from_json(const json& j) {
  std::vector<Column> cols;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2) throw std::invalid_argument("column set: expected [x, y] pairs");
    cols.push_back({p[0].get<std::int64_t>(), p[1].get<std::int64_t>()});
  }
  return ColumnSet(cols);
}

json to_json(const lp::DualCertificate& cert) {
  json entries = json::array();
  for (const auto& [kl, v] : cert.entries) entries.push_back({kl.first, kl.second, to_string(v)});
  json out{{"m", cert.m}, {"entries", entries}, {"objective", to_string(cert.objective)}};
  if (!cert.rectangles.empty()) {
    json rects = json::array();
    for (const auto& r : cert.rectangles) rects.push_back({r.k_lo, r.k_hi, r.l_lo, r.l_hi});
    out["rectangles"] = rects;
    out["scale"] = to_string(cert.scale);
  }
  return out;
}

lp::DualCertificate certificate_from_json(const json& j) {
  lp::DualCertificate cert;
  cert.m = j.at("m").get<std::int64_t>();
  for (const auto& e : j.at("entries")) {
    auto key = std::make_pair(e.at(0).get<std::int64_t>(), e.at(1).get<std::int64_t>());
    cert.entries[key] += rational_from_json(e.at(2));
  }
  cert.objective = rational_from_json(j.at("objective"));
  if (j.contains("rectangles")) {
    for (const auto& r : j.at("rectangles"))
      cert.rectangles.push_back({r.at(0).get<std::int64_t>(), r.at(1).get<std::int64_t>(), r.at(2).get<std::int64_t>(),
                                 r.at(3).get<std::int64_t>()});
    cert.scale = rational_from_json(j.at("scale"));
  }
  return cert;
}

json to_json(const casecheck::Report& rep) {
  json w = json::array();
  for (const auto& wit : rep.witnesses) w.push_back(wit.values);
  return {{"assignments_tested", rep.assignments_tested}, {"solutions_found", rep.solutions_found}, {"witnesses", w}};
}

void write_sweep_csv(std::ostream& out, const bounds::SweepReport& rep, bool with_timing) {
  out << "m,bound_num,bound_den,solved,eps_num,eps_den,wall_ms\n";
  for (const auto& r : rep.records) {
    out << r.m << ',' << r.bound.get_num().get_str() << ',' << r.bound.get_den().get_str() << ','
        << (r.solved ? 1 : 0) << ',';
    if (r.eps) out << r.eps->get_num().get_str() << ',' << r.eps->get_den().get_str();
    else out << ',';
    out << ',' << (with_timing ? static_cast<long long>(r.wall_ms) : 0) << '\n';
  }
}

void write_window_csv(std::ostream& out, const std::vector<nt::WindowRow>& rows) {
  // Decimal columns are approximate; the pass flag is the rigorous verdict.
  const Rational& pi2 = constants::pi_squared().lo;
  out << "x,lhs1,rhs1,lhs2,rhs2,pass\n";
  for (const auto& r : rows) {
    Rational x = make_rational(r.x);
    out << r.x << ',' << r.sum_phi << ',' << to_decimal(3 * x * x / pi2, 6) << ','
        << to_decimal(r.sum_phi_over_k, 9) << ',' << to_decimal(6 * x / pi2, 9) << ',' << (r.pass() ? 1 : 0) << '\n';
  }
}

}  // namespace colnum::io
