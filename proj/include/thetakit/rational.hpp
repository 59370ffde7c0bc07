#pragma once

#include <gmpxx.h>

#include <string>

namespace thetakit {

using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

/// Parses "p/q" or "p". Throws UsageError on malformed input.
Rational rational_from_string(const std::string& s);

/// "p/q", or "p" when the denominator is 1.
std::string rational_to_string(const Rational& q);

Rational floor_rational(const Rational& q);

/// q - floor(q), in [0, 1).
Rational mod_one(const Rational& q);

}  // namespace thetakit
