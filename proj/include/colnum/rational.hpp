#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace colnum {

// Arbitrary precision rational. GMP keeps every value canonical (reduced,
// positive denominator) after each arithmetic operation.
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  Rational r(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
  r.canonicalize();
  return r;
}

// "p/q" or "p" when the denominator is one.
std::string to_string(const Rational& r);

// Accepts "p/q", "p", or a finite decimal such as "1.85" or "-0.001".
// Decimals are converted exactly. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// Human-facing rendering only; never written into data files.
std::string to_decimal(const Rational& r, int digits = 12);

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

}  // namespace colnum
