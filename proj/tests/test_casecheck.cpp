#include <stdexcept>

#include "colnum/casecheck.hpp"
#include "colnum/model.hpp"
#include "doctest.h"

using namespace colnum;
using namespace colnum::casecheck;

TEST_CASE("type 2") {
  Report r = check_type2();
  CHECK(r.solutions_found == 0);
  CHECK(r.assignments_tested == 9);
  Report relaxed = check_type2({.b2_odd = false});
  CHECK(relaxed.solutions_found >= 1);
  for (const auto& w : relaxed.witnesses) CHECK(w.values.at("b2") == w.values.at("Delta"));
}

TEST_CASE("c table") {
  CHECK(c3_times_three(2, 1) == 1);
  CHECK(c3_times_three(5, 4) == 1);
  CHECK(c3_times_three(1, 1) == 0);
  CHECK(c3_times_three(2, 2) == 0);
  CHECK(c3_times_three(1, 2) == -1);
  CHECK_THROWS_AS(c3_times_three(3, 1), std::invalid_argument);
}

TEST_CASE("type 3") {
  Report four = check_type3(4);
  CHECK(four.solutions_found == 0);
  Report three = check_type3(3);
  CHECK(three.solutions_found == 0);
  CHECK(four.assignments_tested > 0);
  CHECK(three.assignments_tested > four.assignments_tested);
  CHECK(check_type3(4).assignments_tested == four.assignments_tested);
  CHECK_THROWS_AS(check_type3(2), std::invalid_argument);
  CHECK_THROWS_AS(check_type3(5), std::invalid_argument);
}

TEST_CASE("type 3 targets") {
  // d = 4 only sees t in {0, 2}; d = 3 sees {4, 6, 8}.
  for (int a : {1, 2})
    for (int b : {1, 2}) {
      int t4 = 6 * 0 - 2 * c3_times_three(a, b), t3 = 6 - 2 * c3_times_three(a, b);
      if (t4 >= 0) CHECK((t4 == 0 || t4 == 2));
      CHECK((t3 == 4 || t3 == 6 || t3 == 8));
    }
}

TEST_CASE("type 3 with Delta = 2 mod 6 admitted") {
  Report r = check_type3(4, {.admit_delta_2 = true});
  CHECK(r.solutions_found >= 1);
  for (const auto& w : r.witnesses) {
    const auto& v = w.values;
    CHECK(v.at("Delta") == 2);
    CHECK(v.at("e1") == 0);
    CHECK(v.at("e2") == 0);
    CHECK(v.at("e3") == 1);
    CHECK(v.at("e4") == 1);
    CHECK(v.at("a3") % 3 == 1);
    CHECK(v.at("b3") % 3 == 2);
  }
  // Every witness class is realized by an extremal matrix.
  for (std::int64_t d : {14, 20}) {
    TypedMatrix M = family(Family::F3, d);
    CHECK(column_count(M) == d + 4);
    CHECK(d % 6 == 2);
  }
}

TEST_CASE("assignment counts are reproducible") {
  // Counts from an independent enumeration.
  CHECK(check_type3(4).assignments_tested == 7560);
  CHECK(check_type3(3).assignments_tested == 55728);
  CHECK(check_type3(4, {.admit_delta_2 = true}).solutions_found == 54);
}
