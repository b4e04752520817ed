#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace chanspace {

// All channel entries, probabilities, and agreement counts are exact.
// Int is an arbitrary-width signed integer, Rat an always-normalized
// rational on top of it.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Parses "5/8", "3", "-0.25", ".5", "1e-3", "2.5E2". Fractions take two
// plain integers; decimals are read as exact decimal fractions (0.7 is
// 7/10, not the nearest double). Throws ParseError on anything else.
Rat parse_rational(std::string_view text);

// Always renders as "numerator/denominator", e.g. "1/1", "-5/8".
std::string fraction_string(const Rat& value);

// Fixed-point rendering with `digits` places after the point, rounded
// half away from zero. Used for report fields that mirror an exact
// fraction, so display rounding never feeds back into computations.
std::string decimal_string(const Rat& value, int digits);

double to_double(const Rat& value);

Int pow2(unsigned exponent);

// Number of nonempty codes over an n-element input set: 2^n - 1.
Int nonempty_code_count(int n);

}  // namespace chanspace
