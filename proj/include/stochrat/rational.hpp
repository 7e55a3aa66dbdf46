#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace stochrat {

/// Exact arbitrary-precision rational. Every probability and price in the
/// library is carried in this type; doubles only appear in the power kernels.
using Rational = mpq_class;

/// Parses "3/4", "-2", "0.125", "1e-3" or "2.5E+2" exactly.
/// Throws InvalidArgument on anything else.
Rational parse_rational(std::string_view text);

/// Exact value of the binary double (no rounding).
Rational rational_from_double(double value);

/// Rational whose value is the shortest decimal that round-trips to `value`,
/// i.e. what a user most likely typed (0.1 -> 1/10).
Rational rational_from_decimal_double(double value);

/// Canonical "num/den" (or "num" when den == 1).
std::string to_string(const Rational& value);

inline double to_double(const Rational& value) { return value.get_d(); }

inline Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

/// Three-way comparison of a and b with an absolute tolerance. A zero
/// tolerance gives exact comparison.
int compare_with_tolerance(const Rational& a, const Rational& b, const Rational& tolerance);

}  // namespace stochrat
