#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace colnum::casecheck {

// One satisfying assignment: residues mod 6 of the named unknowns plus the
// slack values e1..e4 (type 3 only).
struct Witness {
  std::map<std::string, std::int64_t> values;
};

struct Report {
  std::int64_t assignments_tested = 0;
  std::int64_t solutions_found = 0;
  std::vector<Witness> witnesses;  // capped, see kMaxWitnesses
};
inline constexpr std::size_t kMaxWitnesses = 256;

// Residue domains mod 6 and the congruences for the small-type claims.
struct ResidueSystem {
  std::int64_t modulus = 6;
  std::map<std::string, std::vector<std::int64_t>> domains;
};

struct Type2Options {
  bool b2_odd = true;
};
// Delta even, b2 odd, and the two determinant inequalities force b2 = Delta.
ResidueSystem type2_system(const Type2Options& opt = {});
Report check_type2(const Type2Options& opt = {});

struct Type3Options {
  bool admit_delta_2 = false;  // also allow Delta = 2 mod 6
  bool a2_odd = true;
  bool b2_odd = true;
};
ResidueSystem type3_system(int d, const Type3Options& opt = {});
// c(a3, b3, 3) * 3 for a3, b3 not divisible by 3.
int c3_times_three(std::int64_t a3, std::int64_t b3);
Report check_type3(int d, const Type3Options& opt = {});

}  // namespace colnum::casecheck
