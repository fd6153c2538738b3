#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace initforms {

// Exact arithmetic everywhere: arbitrary-precision integers and rationals.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

// "p" when the denominator is 1, "p/q" otherwise. Never decimal.
std::string rat_to_string(const Rational& r);

// Accepts "p" and "p/q" with optional leading '-'. Throws SyntaxError on
// malformed input or zero denominator.
Rational rat_from_string(const std::string& text);

}  // namespace initforms
