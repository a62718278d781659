#include "equilocal/rational.hpp"

#include <stdexcept>

namespace equilocal {

Integer make_integer(std::int64_t value) {
  // mpz_class has no portable int64 constructor on every platform.
  Integer result;
  const bool negative = value < 0;
  const auto magnitude = negative ? -static_cast<std::uint64_t>(value)
                                  : static_cast<std::uint64_t>(value);
  mpz_import(result.get_mpz_t(), 1, 1, sizeof(magnitude), 0, 0, &magnitude);
  if (negative) result = -result;
  return result;
}

Rational make_rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::domain_error("zero denominator");
  Rational result(make_integer(numerator), make_integer(denominator));
  result.canonicalize();
  return result;
}

bool is_integer(const Rational& value) {
  return value.get_den() == 1;
}

std::string to_string(const Rational& value) {
  return value.get_str();
}

std::string to_string(const Integer& value) {
  return value.get_str();
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  Rational result;
  if (result.set_str(std::string(text), 10) != 0)
    throw std::invalid_argument("malformed rational: " + std::string(text));
  if (result.get_den() == 0) throw std::invalid_argument("zero denominator");
  result.canonicalize();
  return result;
}

}  // namespace equilocal
