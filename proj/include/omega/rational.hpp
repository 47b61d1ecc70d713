#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace omega {

/// Exact fraction in canonical form (gcd(|num|, den) = 1, den > 0).
using Rational = boost::multiprecision::mpq_rational;
using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;

/// Accepts "12", "-3/4", "0.25", "-1.5" and "+2". Decimals are read exactly.
/// Throws Error(ParseError) on anything else or on a zero denominator.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

/// Rounded decimal rendering for humans; never parsed back.
std::string to_decimal(const Rational& value, int digits = 6);

int sign(const Rational& value);

Rational dot(std::span<const Rational> lhs, std::span<const Rational> rhs);

Vector matrix_vector(const Matrix& matrix, std::span<const Rational> x);

}  // namespace omega
