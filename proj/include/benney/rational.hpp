#pragma once

#include <gmpxx.h>

#include <string>

namespace benney {

// Exact arbitrary-precision rational coefficients.  All symbolic modules use
// this type; no floating point is allowed anywhere near them.
using Rational = mpq_class;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

/// True iff r reduces to an integer.
inline bool is_integer(const Rational& r) {
    return mpz_cmp_ui(r.get_den().get_mpz_t(), 1) == 0;
}

/// Canonical "p" / "p/q" rendering (q > 0, gcd(p,q) = 1).
inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Parse "p" or "p/q" with optional leading sign.  Throws ParseError on any
/// other shape (GMP itself would accept whitespace and bases we don't want).
Rational parse_rational(const std::string& text);

}  // namespace benney
