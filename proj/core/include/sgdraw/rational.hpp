#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sgdraw {

// Exact scalar used for every authoritative geometric predicate.
using Rational = mpq_class;

// num/den in lowest terms. mpq_class(num, den) leaves the fraction as given,
// and comparisons on a non-canonical mpq are wrong.
Rational make_rational(const mpz_class& num, const mpz_class& den);

// Parses "p", "p/q" or a decimal such as "-1.25" / "3e-2" exactly.
// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise (lowest terms).
std::string to_string(const Rational& value);

// Nearest multiple of 2^-depth; ties round away from zero.
Rational round_dyadic(const Rational& value, int depth);

}  // namespace sgdraw
