#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace capelli {

/// Exact arbitrary-precision rational; always kept canonical (gcd-reduced, positive denominator).
using Rational = mpq_class;

/// Renders as "p/q" with q > 0, including q = 1.
std::string to_fraction_string(const Rational& q);

/// Renders integers without a denominator ("3", "-1") and proper fractions as "p/q".
std::string to_short_string(const Rational& q);

/// Parses "p", "p/q" or "-p/q"; throws std::invalid_argument on malformed input or q = 0.
Rational parse_rational(std::string_view text);

/// Canonical p/q; throws std::invalid_argument when q = 0.
Rational make_rational(long p, long q);

inline Rational factorial(unsigned k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return Rational(f);
}

}  // namespace capelli
