#include "equilocal/laurent.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "equilocal/errors.hpp"

namespace equilocal {

namespace {

// Dense coefficient vector, index = degree, no trailing zeros.
using Dense = std::vector<Rational>;

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Dense to_dense(const LaurentPolynomial& p, LaurentPolynomial::Exponent offset) {
  Dense out;
  if (p.is_zero()) return out;
  out.assign(static_cast<std::size_t>(p.max_exponent() - offset + 1), Rational(0));
  for (const auto& [e, c] : p.terms()) out[static_cast<std::size_t>(e - offset)] = c;
  return out;
}

LaurentPolynomial from_dense(const Dense& p, LaurentPolynomial::Exponent offset) {
  LaurentPolynomial::Terms terms;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != 0) terms.emplace_hint(terms.end(), static_cast<LaurentPolynomial::Exponent>(i) + offset, p[i]);
  }
  return LaurentPolynomial::from_terms(std::move(terms));
}

// Long division in Q[g]; divisor must be nonzero. Returns {quotient, remainder}.
std::pair<Dense, Dense> divmod(Dense dividend, const Dense& divisor) {
  Dense quotient;
  if (dividend.size() < divisor.size()) return {quotient, dividend};
  quotient.assign(dividend.size() - divisor.size() + 1, Rational(0));
  const Rational inv_lead = 1 / divisor.back();
  for (std::size_t k = quotient.size(); k-- > 0;) {
    const Rational& top = dividend[k + divisor.size() - 1];
    if (top == 0) continue;
    Rational factor = top * inv_lead;
    for (std::size_t j = 0; j < divisor.size(); ++j) {
      if (divisor[j] != 0) dividend[k + j] -= factor * divisor[j];
    }
    quotient[k] = std::move(factor);
  }
  dividend.resize(divisor.size() - 1);
  trim(dividend);
  trim(quotient);
  return {quotient, dividend};
}

void make_monic(Dense& p) {
  if (p.empty() || p.back() == 1) return;
  const Rational inv = 1 / p.back();
  for (auto& c : p) c *= inv;
}

}  // namespace

LaurentPolynomial::LaurentPolynomial(const Rational& constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

LaurentPolynomial LaurentPolynomial::monomial(const Rational& coefficient, Exponent exponent) {
  LaurentPolynomial p;
  if (coefficient != 0) p.terms_.emplace(exponent, coefficient);
  return p;
}

LaurentPolynomial LaurentPolynomial::from_terms(Terms terms) {
  std::erase_if(terms, [](const auto& kv) { return kv.second == 0; });
  LaurentPolynomial p;
  p.terms_ = std::move(terms);
  return p;
}

LaurentPolynomial::Exponent LaurentPolynomial::min_exponent() const {
  if (is_zero()) throw PreconditionViolation("min_exponent of zero polynomial");
  return terms_.begin()->first;
}

LaurentPolynomial::Exponent LaurentPolynomial::max_exponent() const {
  if (is_zero()) throw PreconditionViolation("max_exponent of zero polynomial");
  return terms_.rbegin()->first;
}

const Rational& LaurentPolynomial::leading_coefficient() const {
  if (is_zero()) throw PreconditionViolation("leading_coefficient of zero polynomial");
  return terms_.rbegin()->second;
}

Rational LaurentPolynomial::coefficient(Exponent exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

LaurentPolynomial LaurentPolynomial::shifted(Exponent by) const {
  if (by == 0) return *this;
  LaurentPolynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + by, c);
  return out;
}

bool LaurentPolynomial::is_polynomial() const {
  return is_zero() || min_exponent() >= 0;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  for (const auto& [e, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  for (const auto& [e, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
  } else {
    for (auto& [e, c] : terms_) c *= scalar;
  }
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial::Terms out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      auto [it, inserted] = out.try_emplace(ea + eb, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  return LaurentPolynomial::from_terms(std::move(out));
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

std::string LaurentPolynomial::to_string(std::string_view variable) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational magnitude = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << magnitude.get_str();
      continue;
    }
    if (magnitude != 1) os << magnitude.get_str() << "*";
    os << variable;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

LaurentPolynomial laurent_mul(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  return a * b;
}

std::optional<LaurentPolynomial> exact_div(const LaurentPolynomial& a,
                                           const LaurentPolynomial& b) {
  if (b.is_zero()) throw DivisionByZero("exact_div by the zero polynomial");
  if (a.is_zero()) return LaurentPolynomial{};
  // g is a unit, so only the g-free parts need to divide.
  const auto a_low = a.min_exponent();
  const auto b_low = b.min_exponent();
  auto [quotient, remainder] = divmod(to_dense(a, a_low), to_dense(b, b_low));
  if (!remainder.empty()) return std::nullopt;
  return from_dense(quotient, a_low - b_low);
}

LaurentPolynomial polynomial_gcd(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (!a.is_polynomial() || !b.is_polynomial())
    throw PreconditionViolation("polynomial_gcd needs nonnegative exponents");
  Dense x = to_dense(a, 0);
  Dense y = to_dense(b, 0);
  make_monic(x);
  make_monic(y);
  while (!y.empty()) {
    Dense r = divmod(std::move(x), y).second;
    make_monic(r);
    x = std::move(y);
    y = std::move(r);
  }
  return from_dense(x, 0);
}

}  // namespace equilocal
