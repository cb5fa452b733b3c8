#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace chains {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "3", "-2", "1/4", "0.25", "2.5e-1" style inputs and converts them
// to an exact rational. Throws std::invalid_argument on malformed text.
Rational parse_rational(const std::string& text);

// Renders "p" when the denominator is 1, otherwise "p/q".
std::string to_fraction_string(const Rational& r);

inline Int numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

}  // namespace chains
