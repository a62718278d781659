#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace equilocal {

// GMP keeps mpq_class canonical: positive denominator, coprime parts.
using Integer = mpz_class;
using Rational = mpq_class;

Integer make_integer(std::int64_t value);
Rational make_rational(std::int64_t numerator, std::int64_t denominator = 1);

bool is_integer(const Rational& value);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// Inverse of to_string; throws std::invalid_argument on malformed text.
Rational parse_rational(std::string_view text);

}  // namespace equilocal
