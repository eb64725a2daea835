#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace isoforge {

// Exact arithmetic everywhere; distance equality is semantically load-bearing.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Serializes in lowest terms: "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rat &r);

// Accepts "p/q" or a bare integer. Throws Error(Kind::ParseError) on garbage
// or a zero denominator.
Rat parse_rational(const std::string &text);

inline Rat rat(long num, long den = 1) { return Rat(num, den); }

Rat rat_abs(const Rat &r);
Rat rat_min(const Rat &a, const Rat &b);
Rat rat_max(const Rat &a, const Rat &b);

}  // namespace isoforge
