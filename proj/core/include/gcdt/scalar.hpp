#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace gcdt {

// Arbitrary-precision integers and rationals back every exact computation;
// double is reserved for the fractional-power and sampling paths.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Canonical decimal rendering ("-42").
std::string format_int(const BigInt& v);

/// "p" when the denominator is 1, otherwise "p/q" in lowest terms, q > 0.
std::string format_rat(const BigRat& v);

/// Parses an optionally signed decimal integer. Throws std::invalid_argument.
BigInt parse_int(std::string_view text);

/// Parses "p" or "p/q". Throws std::invalid_argument on malformed input or q = 0.
BigRat parse_rat(std::string_view text);

/// base^e with a plain machine exponent; e is small everywhere we raise things.
BigInt ipow(const BigInt& base, std::uint64_t e);
BigRat ratpow(const BigRat& base, std::uint64_t e);

double to_double(const BigRat& v);
double to_double(const BigInt& v);

}  // namespace gcdt
