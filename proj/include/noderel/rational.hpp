#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace noderel {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "3", "-2/7", "0.001" or "1e-6" into an exact rational. Decimal and
/// scientific forms are read exactly, not through a double.
Rational parse_rational(std::string_view text);

/// Canonical "num/den" form ("1/2", "-3", "0").
std::string to_string(const Rational& q);

/// Fixed-point decimal rendering rounded (half away from zero) to
/// `significant` significant digits, trailing zeros removed: 15/32 -> "0.46875".
std::string to_decimal(const Rational& q, int significant = 12);

/// Nearest double, for reporting only.
double to_double(const Rational& q);

}  // namespace noderel
