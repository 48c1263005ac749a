#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace horadam {

// Exact arbitrary-precision rational, always kept canonical:
// denominator > 0 and gcd(|num|, den) = 1.
using Rational = mpq_class;
using Integer = mpz_class;

// Canonical rational from an integer pair; the denominator must be nonzero.
Rational make_rational(long numerator, long denominator = 1);

// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& value);

// Strict literal syntax: optional sign, decimal digits, optionally '/' and a
// positive decimal denominator. No whitespace, no decimal points. Returns
// nullopt on any violation (including a zero denominator).
std::optional<Rational> parse_rational(std::string_view text);

// base^exp for exp >= 0, with 0^0 = 1.
Rational pow(const Rational& base, unsigned long exp);

bool is_integer(const Rational& value);

}  // namespace horadam
