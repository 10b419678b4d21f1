#pragma once

#include <gmpxx.h>

#include <string>

#include "ehk/errors.h"

namespace ehk {

// Exact rationals are GMP's mpq_class throughout; this header only adds the
// few helpers GMP does not ship.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat_from_long(long n) { return Rational(n); }

inline bool rat_is_zero(const Rational& r) { return sgn(r) == 0; }

inline std::string rat_to_string(const Rational& r) { return r.get_str(); }

// r^e for any integer e; throws on 0^negative.
Rational rat_pow(const Rational& r, long e);

// True if r is the square of a rational.
bool rat_is_square(const Rational& r);

// Exact square root; throws DomainError when r is not a rational square.
Rational rat_sqrt(const Rational& r);

// gcd(|a|,|b|) as a nonnegative rational: gcd of numerators over lcm of
// denominators. gcd(0,0) = 0.
Rational rat_gcd(const Rational& a, const Rational& b);

} // namespace ehk
