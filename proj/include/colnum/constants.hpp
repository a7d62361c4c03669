#pragma once

#include "colnum/interval.hpp"

// Rational enclosures of the transcendental constants used by the estimates.
// Each endpoint is within 1e-38 of the true value.
namespace colnum::constants {

const Enclosure& pi_squared();
const Enclosure& two_pi();
const Enclosure& euler_gamma();
// zeta'(2) = -sum log(n)/n^2, obtained by Euler-Maclaurin summation.
const Enclosure& zeta_prime_2();

// zeta(2) = pi^2 / 6.
Interval zeta_2(mpfr_prec_t prec);
// 2*gamma - 1 - 2*zeta'(2)/zeta(2), the secondary term of the unitary
// divisor summatory function.
Interval tau_sum_constant(mpfr_prec_t prec);

}  // namespace colnum::constants
