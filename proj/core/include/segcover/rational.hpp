#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace segcover {

// All coordinates and LP values are exact rationals. GMP keeps values in
// canonical form (reduced, positive denominator) as long as construction
// goes through the helpers below.
using Rational = mpq_class;

// num/den reduced to canonical form. den must be nonzero.
Rational make_rational(long num, long den);

// Parses "p", "p/q" or a decimal literal ("-3.25") exactly.
// Throws std::invalid_argument on malformed text.
Rational parse_rational(const std::string& text);

// Canonical text form: integers as "n", everything else as "p/q".
std::string format_rational(const Rational& v);

// Largest integer <= v / smallest integer >= v, as a machine word.
// Values outside the int64 range saturate; callers only feed coordinates
// that fit comfortably.
std::int64_t floor_to_int(const Rational& v);
std::int64_t ceil_to_int(const Rational& v);

}  // namespace segcover
