#include "colnum/constants.hpp"

namespace colnum::constants {

namespace {

Enclosure make(const char* lo, const char* hi) { return {parse_rational(lo), parse_rational(hi)}; }

}  // namespace

const Enclosure& pi_squared() {
  static const Enclosure e = make("9.8696044010893586188344909998761511353",
                                  "9.8696044010893586188344909998761511354");
  return e;
}

const Enclosure& two_pi() {
  static const Enclosure e = make("6.2831853071795864769252867665590057683",
                                  "6.2831853071795864769252867665590057684");
  return e;
}

const Enclosure& euler_gamma() {
  static const Enclosure e = make("0.5772156649015328606065120900824024310",
                                  "0.5772156649015328606065120900824024311");
  return e;
}

const Enclosure& zeta_prime_2() {
  static const Enclosure e = make("-0.9375482543158437537025740945678649779",
                                  "-0.9375482543158437537025740945678649778");
  return e;
}

Interval zeta_2(mpfr_prec_t prec) { return Interval(pi_squared(), prec) / Interval(Rational(6), prec); }

Interval tau_sum_constant(mpfr_prec_t prec) {
  Interval two(Rational(2), prec);
  Interval gamma(euler_gamma(), prec);
  Interval zp(zeta_prime_2(), prec);
  return two * gamma - Interval(Rational(1), prec) - two * zp / zeta_2(prec);
}

}  // namespace colnum::constants
