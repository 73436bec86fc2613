#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace racgk {

// Exact arbitrary-precision rationals, always kept in lowest terms.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "a/b", "a" and optional leading sign. The result is canonical.
Rational parse_rational(std::string_view text);

// Always "num/den", including integers ("1/1"), so the serialized form is
// schema-stable.
std::string to_string(const Rational& x);

// Square root when x is the square of a rational, otherwise nullopt.
std::optional<Rational> rational_sqrt(const Rational& x);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

}  // namespace racgk
