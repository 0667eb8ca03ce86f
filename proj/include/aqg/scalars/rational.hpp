#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace aqg {

/// Arbitrary precision rational in lowest terms with positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Builds num/den and canonicalizes. Throws DivisionByZero when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Parses "p", "-p" or "p/q". Throws ParseError.
Rational parse_rational(std::string_view text);

/// p^e for any integer e (negative e gives 1/p^-e).
Rational rational_power(long base, long exponent);

}  // namespace aqg
