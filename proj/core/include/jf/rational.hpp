#pragma once

/**
 * Exact scalar types used throughout the library.
 *
 * All series coefficients are arbitrary-precision rationals backed by GMP.
 * Invariant: every Rational is kept in lowest terms with positive
 * denominator (GMP's canonical form).  The helpers below are the only
 * place where raw (num, den) pairs enter the system, so canonicalization
 * happens exactly once.
 */

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace jf {

using Integer = mpz_class;
using Rational = mpq_class;

/// Build a canonical rational from a (possibly uncanonical) num/den pair.
Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

/// Parse "p/q" or "p" (den defaults to 1).  Throws std::invalid_argument
/// on malformed input or zero denominator.
Rational rational_from_string(const std::string& s);

/// Canonical "p/q" rendering; the "/q" part is always present ("5/1").
std::string rational_to_string(const Rational& x);

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

/// Exact n! as an integer.
Integer factorial(unsigned long n);

/// Exact binomial coefficient C(n, k).
Integer binomial(unsigned long n, unsigned long k);

/// base^e for integer e (negative e inverts; throws on 0^negative).
Rational pow_rational(const Rational& base, long e);

}  // namespace jf
