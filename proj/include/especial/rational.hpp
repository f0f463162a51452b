#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace especial {

/// Exact rational number. Always canonical (lowest terms, positive denominator).
using Rational = mpq_class;

/// num/den in lowest terms; mpq_class(num, den) alone leaves it unreduced.
inline Rational ratio(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "n", "-n", or "p/q" with q an unsigned nonzero integer. The result
/// is canonicalized.
/// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// "n" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

/// Decimal rendering to `digits` significant digits. Display only.
std::string to_decimal(const Rational& r, int digits = 12);

}  // namespace especial
