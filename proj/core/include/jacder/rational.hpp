#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace jacder {

// Arbitrary-precision rationals. gmpxx keeps results of arithmetic in lowest
// terms with a positive denominator; values built from raw parts go through
// make_rational() which canonicalizes.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& r);

// Accepts "[-]digits" or "[-]digits/digits"; throws Error(ParseError).
Rational parse_rational(std::string_view text);

}  // namespace jacder
