#pragma once

#include <gmpxx.h>

#include <string>

namespace ohmnet {

// Exact arbitrary-precision scalars. mpq_class keeps values canonical
// (reduced, positive denominator), which is exactly the invariant we need.
using BigInt = mpz_class;
using Rational = mpq_class;

// num/den as a canonical Rational; throws DomainError on a zero denominator.
Rational make_rational(const BigInt& num, const BigInt& den);

// Parses "p" or "p/q" with an optional leading sign. Throws ParseError.
Rational parse_rational(const std::string& text);

// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);

// Fixed-point decimal rendering, round-to-nearest, display only.
std::string to_decimal(const Rational& q, int digits = 12);

} // namespace ohmnet
