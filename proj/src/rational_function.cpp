#include "equilocal/rational_function.hpp"

#include "equilocal/errors.hpp"

namespace equilocal {

RationalFunction::RationalFunction() : denominator_(Rational(1)) {}

RationalFunction::RationalFunction(const LaurentPolynomial& numerator)
    : RationalFunction(numerator, LaurentPolynomial(Rational(1))) {}

RationalFunction::RationalFunction(const LaurentPolynomial& numerator,
                                   const LaurentPolynomial& denominator)
    : numerator_(numerator), denominator_(denominator) {
  if (denominator_.is_zero())
    throw DivisionByZero("rational function with zero denominator");
  reduce();
}

void RationalFunction::reduce() {
  if (numerator_.is_zero()) {
    denominator_ = LaurentPolynomial(Rational(1));
    return;
  }
  // Split off the powers of g, then cancel the g-free parts by their gcd.
  const auto num_low = numerator_.min_exponent();
  const auto den_low = denominator_.min_exponent();
  LaurentPolynomial num = numerator_.shifted(-num_low);
  LaurentPolynomial den = denominator_.shifted(-den_low);

  const LaurentPolynomial common = polynomial_gcd(num, den);
  if (common.max_exponent() > 0) {
    num = *exact_div(num, common);
    den = *exact_div(den, common);
  }

  const auto g_power = num_low - den_low;
  if (g_power >= 0) {
    num = num.shifted(g_power);
  } else {
    den = den.shifted(-g_power);
  }

  const Rational scale = 1 / den.leading_coefficient();
  num *= scale;
  den *= scale;
  numerator_ = std::move(num);
  denominator_ = std::move(den);
}

std::string RationalFunction::to_string(std::string_view variable) const {
  if (denominator_.term_count() == 1 && denominator_.coefficient(0) == 1)
    return numerator_.to_string(variable);
  return "(" + numerator_.to_string(variable) + ")/(" + denominator_.to_string(variable) + ")";
}

RationalFunction rf_add_and_reduce(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.denominator() == b.denominator())
    return RationalFunction(a.numerator() + b.numerator(), a.denominator());
  // Cross-multiply over lcm(den_a, den_b) to keep degrees down.
  const LaurentPolynomial common = polynomial_gcd(a.denominator(), b.denominator());
  const LaurentPolynomial a_cofactor = *exact_div(b.denominator(), common);
  const LaurentPolynomial b_cofactor = *exact_div(a.denominator(), common);
  return RationalFunction(a.numerator() * a_cofactor + b.numerator() * b_cofactor,
                          a.denominator() * a_cofactor);
}

std::optional<Rational> constant_value(const RationalFunction& a) {
  const auto& den = a.denominator();
  if (den.term_count() != 1 || den.coefficient(0) != 1) return std::nullopt;
  const auto& num = a.numerator();
  if (num.is_zero()) return Rational(0);
  if (num.term_count() != 1 || num.min_exponent() != 0) return std::nullopt;
  return num.coefficient(0);
}

}  // namespace equilocal
