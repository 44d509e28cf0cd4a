#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace essat {

// Exact rationals are GMP's; mpq_class keeps values canonical (lowest terms,
// positive denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "-p", "p/q". Throws ParseError on anything else or q == 0.
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

Integer floor(const Rational& value);
Integer ceil(const Rational& value);

Rational midpoint(const Rational& a, const Rational& b);

// The rational of smallest denominator strictly inside (lo, hi); among those,
// the one of smallest absolute value. Requires lo < hi.
Rational simplest_between(const Rational& lo, const Rational& hi);

inline int sign(const Rational& value) { return sgn(value); }
inline int sign(const Integer& value) { return sgn(value); }

}  // namespace essat
