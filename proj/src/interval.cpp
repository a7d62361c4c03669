#include "colnum/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace colnum {

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Rational& value, mpfr_prec_t prec) : Interval(prec) {
  mpfr_set_q(lo_, value.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, value.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const Enclosure& e, mpfr_prec_t prec) : Interval(prec) {
  if (e.lo > e.hi) throw std::invalid_argument("inverted enclosure");
  mpfr_set_q(lo_, e.lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, e.hi.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const Interval& other) : Interval(other.prec_) {
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : Interval(other.prec_) {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other) {
  if (this != &other) {
    prec_ = other.prec_;
    mpfr_set_prec(lo_, prec_);
    mpfr_set_prec(hi_, prec_);
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
  std::swap(prec_, other.prec_);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Rational Interval::lower() const {
  Rational q;
  mpfr_get_q(q.get_mpq_t(), lo_);
  return q;
}

Rational Interval::upper() const {
  Rational q;
  mpfr_get_q(q.get_mpq_t(), hi_);
  return q;
}

double Interval::approx() const {
  return 0.5 * (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN));
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

namespace {

using BinaryOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

// Min and max over the four endpoint combinations, each rounded outward.
void corner_hull(mpfr_ptr lo, mpfr_ptr hi, BinaryOp op, mpfr_srcptr alo, mpfr_srcptr ahi,
                 mpfr_srcptr blo, mpfr_srcptr bhi, mpfr_prec_t prec) {
  mpfr_t t;
  mpfr_init2(t, prec);
  mpfr_srcptr as[2] = {alo, ahi};
  mpfr_srcptr bs[2] = {blo, bhi};
  bool first = true;
  for (auto x : as) {
    for (auto y : bs) {
      op(t, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t, lo)) mpfr_set(lo, t, MPFR_RNDD);
      op(t, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t, hi)) mpfr_set(hi, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
}

}  // namespace

Interval operator*(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  corner_hull(r.lo_, r.hi_, &mpfr_mul, a.lo_, a.hi_, b.lo_, b.hi_, r.prec_);
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (mpfr_sgn(b.lo_) <= 0 && mpfr_sgn(b.hi_) >= 0)
    throw std::domain_error("interval division by an enclosure of zero");
  Interval r(std::max(a.prec_, b.prec_));
  corner_hull(r.lo_, r.hi_, &mpfr_div, a.lo_, a.hi_, b.lo_, b.hi_, r.prec_);
  return r;
}

Interval log(const Interval& a) {
  if (mpfr_sgn(a.lo_) <= 0) throw std::domain_error("log of non-positive interval");
  Interval r(a.prec_);
  mpfr_log(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_log(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

Interval sqrt(const Interval& a) {
  if (mpfr_sgn(a.lo_) < 0) throw std::domain_error("sqrt of negative interval");
  Interval r(a.prec_);
  mpfr_sqrt(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

std::optional<bool> compare_le(const Interval& a, const Interval& b) {
  if (mpfr_lessequal_p(a.hi_, b.lo_)) return true;
  if (mpfr_greater_p(a.lo_, b.hi_)) return false;
  return std::nullopt;
}

}  // namespace colnum
