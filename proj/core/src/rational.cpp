#include "wronski/rational.hpp"

#include <stdexcept>

namespace wronski {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) throw std::invalid_argument("empty rational");
  if (s.front() == '+') s.erase(s.begin());
  Rational q;
  auto slash = s.find('/');
  auto dot = s.find('.');
  if (dot != std::string::npos && slash == std::string::npos) {
    // Decimal literal: exact conversion of the written digits.
    bool neg = !s.empty() && s.front() == '-';
    std::string digits = neg ? s.substr(1) : s;
    dot = digits.find('.');
    std::string whole = digits.substr(0, dot);
    std::string frac = digits.substr(dot + 1);
    if ((whole + frac).empty() || (whole + frac).find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("malformed rational: " + std::string(text));
    Integer num(whole.empty() ? "0" : whole);
    Integer den = 1;
    for (char c : frac) {
      num = num * 10 + (c - '0');
      den *= 10;
    }
    q = Rational(num, den);
    if (neg) q = -q;
    q.canonicalize();
    return q;
  }
  if (s.find_first_not_of("-0123456789/") != std::string::npos)
    throw std::invalid_argument("malformed rational: " + std::string(text));
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + std::string(text));
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

double to_double(const Rational& q) { return q.get_d(); }

Rational pow(const Rational& base, unsigned exponent) {
  Rational result = 1;
  Rational b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    b *= b;
    exponent >>= 1U;
  }
  return result;
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace wronski
