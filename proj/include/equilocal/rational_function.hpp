#pragma once

#include <optional>
#include <string>

#include "equilocal/laurent.hpp"
#include "equilocal/rational.hpp"

namespace equilocal {

/// Quotient of Laurent polynomials in g, always held in canonical form:
///  - the denominator is an ordinary polynomial (no negative exponents),
///  - numerator and denominator have no common non-unit factor (including g),
///  - the denominator is monic, so its leading coefficient is 1.
/// Two rational functions are equal iff their canonical parts are equal, which
/// makes constancy a syntactic check.
class RationalFunction {
 public:
  /// The zero function, 0/1.
  RationalFunction();
  explicit RationalFunction(const LaurentPolynomial& numerator);
  /// Throws DivisionByZero when the denominator is zero.
  RationalFunction(const LaurentPolynomial& numerator, const LaurentPolynomial& denominator);

  const LaurentPolynomial& numerator() const noexcept { return numerator_; }
  const LaurentPolynomial& denominator() const noexcept { return denominator_; }

  bool is_zero() const noexcept { return numerator_.is_zero(); }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.numerator_ == b.numerator_ && a.denominator_ == b.denominator_;
  }

  std::string to_string(std::string_view variable = "g") const;

 private:
  void reduce();

  LaurentPolynomial numerator_;
  LaurentPolynomial denominator_;
};

/// Exact sum a + b in canonical form.
RationalFunction rf_add_and_reduce(const RationalFunction& a, const RationalFunction& b);

/// The constant value of a, or nullopt when a is not constant.
std::optional<Rational> constant_value(const RationalFunction& a);

}  // namespace equilocal
