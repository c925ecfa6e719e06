#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace crnv {

/// Molecule counts. Nonnegative by convention; unbounded so that
/// populations such as 2^67 and beyond are exact.
using Count = boost::multiprecision::cpp_int;

/// Signed arbitrary-precision integer for functional coefficients and deltas.
using Integer = boost::multiprecision::cpp_int;

/// Rate constants.
using Rational = boost::multiprecision::cpp_rational;

/// 2^k.
Count pow2(unsigned k);

/// Parses a nonnegative decimal integer ("0", "100", "147573952589676412928").
/// Throws SchemaError on anything else (signs, whitespace, exponents).
Count parse_count(std::string_view text);

/// Parses a positive decimal rate ("1", "0.5", "12.125").
Rational parse_rate(std::string_view text);

std::string to_decimal(const Integer& value);

/// Shortest exact decimal rendering of a rate produced by parse_rate.
/// Throws ParameterError if the rate has no finite decimal expansion.
std::string format_rate(const Rational& rate);

double to_double(const Integer& value);
double to_double(const Rational& value);

} // namespace crnv
