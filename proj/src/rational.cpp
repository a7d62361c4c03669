#include "colnum/rational.hpp"

#include <stdexcept>

namespace colnum {

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

BigInt parse_int(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw std::invalid_argument("not an integer: " + std::string(s));
  BigInt v(std::string(s), 10);
  return negative ? BigInt(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_int(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw std::invalid_argument("bad denominator: " + std::string(text));
    BigInt den(std::string(den_text), 10);
    if (den == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    bool negative = !int_part.empty() && int_part.front() == '-';
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+'))
      int_part.remove_prefix(1);
    if (int_part.empty()) int_part = "0";
    if (!all_digits(int_part) || (!frac_part.empty() && !all_digits(frac_part)))
      throw std::invalid_argument("bad decimal: " + std::string(text));
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_part.size());
    BigInt num = BigInt(std::string(int_part), 10) * scale;
    if (!frac_part.empty()) num += BigInt(std::string(frac_part), 10);
    Rational r(negative ? BigInt(-num) : num, scale);
    r.canonicalize();
    return r;
  }
  return Rational(parse_int(text));
}

std::string to_decimal(const Rational& r, int digits) {
  // Truncated toward zero at the requested number of fractional digits.
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  BigInt scaled = r.get_num() * scale;
  BigInt q;
  mpz_tdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), r.get_den().get_mpz_t());
  bool negative = q < 0 || (q == 0 && r < 0);
  BigInt mag = abs(q);
  std::string s = mag.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<size_t>(digits + 1) - s.size(), '0');
  if (digits > 0) s.insert(s.size() - static_cast<size_t>(digits), ".");
  return negative ? "-" + s : s;
}

}  // namespace colnum
