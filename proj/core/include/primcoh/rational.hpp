#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace primcoh {

using Int = boost::multiprecision::cpp_int;

// Exact fraction over arbitrary-precision integers. Always canonical:
// positive denominator, gcd(|num|, den) = 1, zero stored as 0/1.
using Rational = boost::multiprecision::cpp_rational;

// Parses "p" or "p/q" where p is an optionally signed integer literal and q a
// positive integer literal. Anything else (including "1/0") is a ParseError.
Rational parse_rational(std::string_view text);

// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);

} // namespace primcoh
