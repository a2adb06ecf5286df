#pragma once

// Exact rational numbers. Values are always canonical (reduced, positive
// denominator), so operator== is structural equality.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lgmk {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Builds num/den in canonical form. Throws std::domain_error on den == 0.
Rational make_rational(long num, long den = 1);
Rational make_rational(const BigInt& num, const BigInt& den);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const std::vector<Rational>& v);

/// Parses "p", "-p" or "p/q". Returns nullopt on malformed input.
std::optional<Rational> parse_rational(std::string_view text);

bool is_integer(const Rational& r);

/// Representative of r mod 1 in [0, 1).
Rational frac(const Rational& r);

/// Exact square root if r is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& r);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

/// Numerator and denominator as longs; throws std::overflow_error if either
/// does not fit.
long small_num(const Rational& r);
long small_den(const Rational& r);

}  // namespace lgmk
