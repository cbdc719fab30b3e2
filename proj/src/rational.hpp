#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace treegap {

// All diagram data (edge indices, measures, cut ratios) is exact rational;
// floating point appears only inside eigensolvers.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

inline double rat_dbl(const Rat& r) { return r.convert_to<double>(); }

/// Canonical text form: "p/q", or just "p" when the denominator is 1.
std::string rat_str(const Rat& r);

/// Parses "p", "-p", "p/q". Returns nullopt on malformed input or q == 0.
std::optional<Rat> rat_parse(std::string_view s);

/// base^exp for exp >= 0.
Rat rat_pow(const Rat& base, long exp);

/// Least positive rational that is an integer multiple of both a and b.
Rat rat_lcm(const Rat& a, const Rat& b);

}  // namespace treegap
