#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace apolar {

// Exact rationals are GMP's mpq_class. Every value handed out by this library
// is canonicalized (lowest terms, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q" (surrounding whitespace allowed). Throws
/// InputError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Reduced "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

Integer factorial(unsigned n);

}  // namespace apolar
