#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace surfcalc {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return denominator_of(r) == 1; }

// Floor/ceil of an exact rational. cpp_int division truncates toward zero.
Integer floor_of(const Rational& r);
Integer ceil_of(const Rational& r);

// Canonical text form "p" or "p/q" (q > 1, lowest terms).
std::string to_string(const Rational& r);

// Accepts "p", "-p", "p/q"; q must be non-zero. Result is normalized.
Rational parse_rational(std::string_view text);

// Narrowing for values that must fit machine integers (exit codes, loop bounds).
std::int64_t to_int64(const Rational& r);

}  // namespace surfcalc
