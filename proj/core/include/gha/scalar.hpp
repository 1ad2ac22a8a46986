#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace gha {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Accepts integers ("-3"), fractions ("3/2") and decimals ("0.25", "-1.5e-2").
// Decimals are converted exactly. Throws InvalidArgument on malformed text.
Rational parse_rational(std::string_view text);

// Comma-separated list of parse_rational literals.
std::vector<Rational> parse_rational_list(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

// %.17g
std::string format_double(double value);

double to_double(const Rational& value);

bool is_integer(const Rational& value);

inline BigInt numerator_of(const Rational& value) { return boost::multiprecision::numerator(value); }
inline BigInt denominator_of(const Rational& value) { return boost::multiprecision::denominator(value); }

bool is_perfect_square(const BigInt& value);
BigInt integer_sqrt(const BigInt& value);

}  // namespace gha
