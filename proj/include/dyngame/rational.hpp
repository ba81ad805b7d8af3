// Exact rational scalar type and its string conversions. All core solver
// state is exact; doubles appear only behind the float-mode switch.
#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dyngame {

using Rational = mpq_class;

// Accepts "num/den", plain integers and decimal strings ("-3", "0.125").
// Decimal digits convert exactly (power-of-ten denominator). No exponents,
// no whitespace. Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

// Canonical form: "n" when the denominator is 1, otherwise "n/d".
std::string format_rational(const Rational& r);

inline double to_double(const Rational& r) { return r.get_d(); }

}  // namespace dyngame
