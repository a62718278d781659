#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "equilocal/rational.hpp"

namespace equilocal {

/// Univariate Laurent polynomial in g over exact rationals.
///
/// Stored sparsely as exponent -> coefficient; no stored coefficient is ever
/// zero, so the zero polynomial is the empty map.
class LaurentPolynomial {
 public:
  using Exponent = std::int64_t;
  using Terms = std::map<Exponent, Rational>;

  LaurentPolynomial() = default;
  explicit LaurentPolynomial(const Rational& constant);

  static LaurentPolynomial monomial(const Rational& coefficient, Exponent exponent);
  /// Drops zero coefficients.
  static LaurentPolynomial from_terms(Terms terms);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  // The following three require a nonzero polynomial.
  Exponent min_exponent() const;
  Exponent max_exponent() const;
  const Rational& leading_coefficient() const;

  Rational coefficient(Exponent exponent) const;

  /// Multiplies by g^by.
  LaurentPolynomial shifted(Exponent by) const;

  /// True when every exponent is >= 0.
  bool is_polynomial() const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const Rational& scalar);

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
    a += b;
    return a;
  }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
    a -= b;
    return a;
  }
  friend LaurentPolynomial operator*(LaurentPolynomial a, const Rational& scalar) {
    a *= scalar;
    return a;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  LaurentPolynomial operator-() const;

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.terms_ == b.terms_;
  }

  /// Human-readable form such as "1 - g^2 + 3/2*g^-1", highest exponent first.
  std::string to_string(std::string_view variable = "g") const;

 private:
  Terms terms_;
};

/// Product a*b. Same as operator*.
LaurentPolynomial laurent_mul(const LaurentPolynomial& a, const LaurentPolynomial& b);

/// Returns q with q*b == a exactly, or nullopt when b does not divide a in
/// Q[g, g^-1]. Throws DivisionByZero when b is zero.
std::optional<LaurentPolynomial> exact_div(const LaurentPolynomial& a,
                                           const LaurentPolynomial& b);

/// Monic gcd in Q[g] of two polynomials (no negative exponents). The gcd of
/// zero and zero is zero.
LaurentPolynomial polynomial_gcd(const LaurentPolynomial& a, const LaurentPolynomial& b);

}  // namespace equilocal
