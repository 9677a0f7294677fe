#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace freewalk {

using Rational = mpq_class;
using Integer = mpz_class;

// Always "p/q" with q > 0, including "n/1" for integers.
std::string to_string(const Rational& q);

// Accepts "p/q", "p", and an optional leading '-'.
Rational parse_rational(std::string_view text);

double to_double(const Rational& q);

Rational abs(const Rational& q);

// base^exponent for a possibly negative exponent.
Rational rational_pow(long base, long exponent);

}  // namespace freewalk
