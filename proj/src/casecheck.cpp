#include "colnum/casecheck.hpp"

#include <stdexcept>

namespace colnum::casecheck {

namespace {

std::int64_t mod6(std::int64_t v) { return ((v % 6) + 6) % 6; }

std::vector<std::int64_t> all_residues() { return {0, 1, 2, 3, 4, 5}; }
std::vector<std::int64_t> odd_residues() { return {1, 3, 5}; }

void record(Report& rep, Witness w) {
  ++rep.solutions_found;
  if (rep.witnesses.size() < kMaxWitnesses) rep.witnesses.push_back(std::move(w));
}

}  // namespace

ResidueSystem type2_system(const Type2Options& opt) {
  ResidueSystem s;
  s.domains["Delta"] = {0, 2, 4};
  s.domains["b2"] = opt.b2_odd ? odd_residues() : all_residues();
  return s;
}

Report check_type2(const Type2Options& opt) {
  ResidueSystem s = type2_system(opt);
  Report rep;
  for (std::int64_t D : s.domains.at("Delta"))
    for (std::int64_t b2 : s.domains.at("b2")) {
      ++rep.assignments_tested;
      // b2 <= Delta and a2 - 2 b1 >= -Delta with 2 b1 + b2 - a2 = 2 Delta
      // give b2 = Delta exactly.
      if (mod6(b2 - D) == 0) record(rep, {{{"Delta", D}, {"b2", b2}}});
    }
  return rep;
}

int c3_times_three(std::int64_t a3, std::int64_t b3) {
  std::int64_t a = ((a3 % 3) + 3) % 3, b = ((b3 % 3) + 3) % 3;
  if (a == 0 || b == 0) throw std::invalid_argument("c3: residues must be nonzero mod 3");
  if (a == 2 && b == 1) return 1;
  if (a == 1 && b == 2) return -1;
  return 0;
}

ResidueSystem type3_system(int d, const Type3Options& opt) {
  if (d != 3 && d != 4) throw std::invalid_argument("check_type3: d must be 3 or 4");
  ResidueSystem s;
  std::vector<std::int64_t> delta = {0, 4};
  if (d == 4) delta.insert(delta.end(), {1, 3, 5});
  if (opt.admit_delta_2) delta.push_back(2);
  s.domains["Delta"] = delta;
  s.domains["b1"] = all_residues();
  s.domains["a2"] = opt.a2_odd ? odd_residues() : all_residues();
  s.domains["b2"] = opt.b2_odd ? odd_residues() : all_residues();
  s.domains["a3"] = {1, 2, 4, 5};
  s.domains["b3"] = {1, 2, 4, 5};
  return s;
}

Report check_type3(int d, const Type3Options& opt) {
  ResidueSystem s = type3_system(d, opt);
  Report rep;
  for (std::int64_t D : s.domains.at("Delta"))
    for (std::int64_t b1 : s.domains.at("b1"))
      for (std::int64_t a2 : s.domains.at("a2"))
        for (std::int64_t b2 : s.domains.at("b2"))
          for (std::int64_t a3 : s.domains.at("a3"))
            for (std::int64_t b3 : s.domains.at("b3")) {
              // 2e1 + 2e2 + e3 + e4 = 6((4 - d) - c)
              std::int64_t t = 6 * (4 - d) - 2 * c3_times_three(a3, b3);
              if (t < 0) continue;
              for (std::int64_t e1 = 0; 2 * e1 <= t; ++e1)
                for (std::int64_t e2 = 0; 2 * e1 + 2 * e2 <= t; ++e2)
                  for (std::int64_t e3 = 0; 2 * e1 + 2 * e2 + e3 <= t; ++e3) {
                    std::int64_t e4 = t - 2 * e1 - 2 * e2 - e3;
                    ++rep.assignments_tested;
                    bool ok = mod6(b3 + e1 - D) == 0 && mod6(3 * b1 - a3 + e2 - D) == 0 &&
                              mod6(2 * b3 - 3 * a2 + e3 - D) == 0 && mod6(3 * b2 - 2 * a3 + e4 - D) == 0;
                    if (ok)
                      record(rep, {{{"Delta", D}, {"b1", b1}, {"a2", a2}, {"b2", b2}, {"a3", a3}, {"b3", b3},
                                    {"e1", e1}, {"e2", e2}, {"e3", e3}, {"e4", e4}}});
                  }
            }
  return rep;
}

}  // namespace colnum::casecheck
