#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace apsum {

/// Arbitrary-precision integer.
using Int = mpz_class;

/// Arbitrary-precision rational, kept canonical: denominator > 0,
/// gcd(|num|, den) = 1, zero is 0/1.
using Rat = mpq_class;

/// p/q as a canonical rational. Rejects q = 0.
Rat ratio(const Int& p, const Int& q);
Rat ratio(long p, long q);

/// n! for n >= 0.
Int factorial(long n);

/// Integer binomial coefficient via the falling-factorial convention,
/// so negative n is allowed: binom(-1, 0) = 1, binom(n, j) = 0 for
/// integer 0 <= n < j. Rejects j < 0.
Int binomial(const Int& n, long j);
Int binomial(long n, long j);

/// Generalized binomial binom(x, j) = x(x-1)...(x-j+1)/j! for rational x.
Rat binomial(const Rat& x, long j);

/// base^e for e >= 0 with the convention 0^0 = 1.
Int pow(const Int& base, long e);
Rat pow(const Rat& base, long e);

/// True iff q is in canonical form (den > 0, gcd = 1, 0 stored as 0/1).
bool is_canonical(const Rat& q);

/// Canonical textual form: "p/q", shortened to "p" when q = 1.
std::string to_string(const Rat& q);
std::string to_string(const Int& n);

/// Parses "p/q" or "p"; result is canonicalized. Rejects malformed input
/// and zero denominators.
Rat rational_from_string(const std::string& text);

}  // namespace apsum
