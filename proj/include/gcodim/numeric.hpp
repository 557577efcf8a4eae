#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <span>
#include <string>
#include <string_view>

namespace gcodim {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

// n! / (k_1! ... k_s!) with n = sum of parts.
BigInt multinomial(std::span<const int> parts);

// Accepts "p/q", "p" or "-p/q". Throws std::invalid_argument on malformed input
// or a zero denominator.
Rational parse_rational(std::string_view text);

// Canonical "p/q" form, or "p" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

// Natural logarithm of a positive integer, valid far beyond double range.
double log_of(const BigInt& value);

bool is_integer(const Rational& value);

}  // namespace gcodim
