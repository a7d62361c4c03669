#pragma once

#include <mpfr.h>

#include <optional>

#include "colnum/rational.hpp"

namespace colnum {

// Closed rational enclosure [lo, hi] of a real constant.
struct Enclosure {
  Rational lo;
  Rational hi;
};

// Outward-rounded interval over MPFR. Lower endpoints are always rounded
// toward -inf and upper endpoints toward +inf, so the true value of any
// expression built from these operations lies inside the result.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec);
  Interval(const Rational& value, mpfr_prec_t prec);
  Interval(const Enclosure& e, mpfr_prec_t prec);
  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;
  ~Interval();

  mpfr_prec_t precision() const { return prec_; }
  Rational lower() const;
  Rational upper() const;
  double approx() const;

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);

  friend Interval log(const Interval& a);
  friend Interval sqrt(const Interval& a);
  friend std::optional<bool> compare_le(const Interval& a, const Interval& b);

 private:
  mpfr_prec_t prec_;
  mpfr_t lo_;
  mpfr_t hi_;
};

// Three-valued comparison of enclosures: a <= b is certain, refuted, or
// undecided at the current precision.
std::optional<bool> compare_le(const Interval& a, const Interval& b);

// Re-evaluates `test` at doubling precision until it is decided or the
// precision cap is reached. An undecided comparison yields std::nullopt.
template <class Test>
std::optional<bool> decide_le(Test&& test, mpfr_prec_t start = 64, mpfr_prec_t cap = 4096) {
  for (mpfr_prec_t p = start; p <= cap; p *= 2) {
    if (auto r = test(p)) return r;
  }
  return std::nullopt;
}

}  // namespace colnum
