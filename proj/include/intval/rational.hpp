#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace intval {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "n", "-n" or "n/d" (d != 0) into a reduced rational.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

// "n" when the denominator is 1, otherwise "n/d".
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Nonnegative representative of z mod m, m > 0.
Integer mod_floor(const Integer& z, const Integer& m);

} // namespace intval
