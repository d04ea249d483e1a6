#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace adjorbit {

/// Arbitrary-precision rationals. GMP keeps every arithmetic result in
/// lowest terms with a positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical text form: "p/q", or "p" when q = 1.
std::string to_string(const Rational& value);

/// Parses "p", "-p", "p/q". Throws Error(Parse) on anything else or q = 0.
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

}  // namespace adjorbit
