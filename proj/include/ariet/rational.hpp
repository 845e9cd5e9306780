#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ariet {

// Exact arithmetic throughout; no floating point enters any dynamics.
using Rational = mpq_class;
using Integer = mpz_class;

// num/den in lowest terms; den != 0. mpq_class(num, den) alone does not reduce.
Rational make_rational(const Integer& num, const Integer& den);

// Accepts "p/q", "p" and an optional leading sign. Throws ParseError.
Rational parse_rational(std::string_view text);

// Always "p/q", including integers ("7/1").
std::string to_exact_string(const Rational& value);

double to_double(const Rational& value);

// Distance to the nearest integer, in [0, 1/2].
Rational distance_to_integer(const Rational& value);

Integer floor_of(const Rational& value);

}  // namespace ariet
