#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace gion {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, kept in lowest terms with a positive
/// denominator by the backend.
using Rational = boost::multiprecision::cpp_rational;

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

/// Exact binary expansion of a finite double (no decimal rounding).
/// Throws std::domain_error for NaN or infinity.
Rational rational_from_double(double value);

/// Nearest double to an exact rational.
double to_double(const Rational& value);

/// Parses "3", "-7/4", or a decimal literal such as "2.25" or "1.5e-3".
/// Decimals are read exactly (2.25 -> 9/4). Throws std::invalid_argument
/// on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

int sign(const Rational& value);

}  // namespace gion
