#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace edgering {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using IntVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

/// Greatest common divisor, always nonnegative; gcd(0, 0) == 0.
Integer gcd(const Integer& a, const Integer& b);

/// Floor division for arbitrary signs.
Integer floor_div(const Integer& a, const Integer& b);

/// "p/q" for non-integers, "p" for integers.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// Parses "p", "-p" or "p/q"; throws InvalidArgument on malformed text.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

bool is_integral(const Rational& value);

/// Narrowing with an overflow check.
std::int64_t to_int64(const Integer& value);

}  // namespace edgering
