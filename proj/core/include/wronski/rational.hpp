#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <string_view>

namespace wronski {

using Integer = mpz_class;
using Rational = mpq_class;
using Complex = std::complex<double>;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
double to_double(const Rational& q);

// Power with a nonnegative integer exponent.
Rational pow(const Rational& base, unsigned exponent);
Integer factorial(unsigned n);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const Complex& c) { return c == Complex{}; }

template <class S>
S from_rational(const Rational& q);

template <>
inline Rational from_rational<Rational>(const Rational& q) { return q; }

template <>
inline Complex from_rational<Complex>(const Rational& q) { return {q.get_d(), 0.0}; }

}  // namespace wronski
