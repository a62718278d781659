#include "equilocal/genus.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace equilocal {

GenusPolynomial genus_via_counts(const FixedPointData& d) {
  GenusPolynomial gp{negative_count_profile(d)};
  for (std::size_t i = 1; i < gp.coefficients.size(); i += 2) gp.coefficients[i] = -gp.coefficients[i];
  return gp;
}

namespace {

// Elementary symmetric polynomials sigma_0..sigma_n of the monomials g^w_j,
// read off as the t-coefficients of prod_j (1 + t g^w_j).
std::vector<LaurentPolynomial> elementary_symmetric_monomials(const std::vector<Weight>& weights) {
  std::vector<LaurentPolynomial> sigma(weights.size() + 1);
  sigma[0] = LaurentPolynomial(Rational(1));
  for (std::size_t j = 0; j < weights.size(); ++j) {
    for (std::size_t k = j + 1; k > 0; --k) sigma[k] += sigma[k - 1].shifted(weights[j]);
  }
  return sigma;
}

}  // namespace

std::vector<RationalFunction> index_formula_sums(const FixedPointData& d) {
  const auto n = static_cast<std::size_t>(d.n());

  // 1 - g^w = -g^w (1 - g^|w|) for w < 0, so every denominator is a signed
  // power of g times prod_j (1 - g^|w_j|). Points sharing the same |w|
  // multiset share that polynomial and their numerators add directly.
  std::map<std::vector<Weight>, std::vector<LaurentPolynomial>> groups;
  for (const auto& p : d.points()) {
    std::vector<Weight> magnitudes;
    Weight negative_total = 0;
    bool odd = false;
    for (Weight w : p.weights) {
      magnitudes.push_back(w < 0 ? -w : w);
      if (w < 0) {
        negative_total += w;
        odd = !odd;
      }
    }
    std::ranges::sort(magnitudes);
    auto& numerators = groups[magnitudes];
    numerators.resize(n + 1);

    const Rational sign(odd ? -1 : 1);
    const auto sigma = elementary_symmetric_monomials(p.weights);
    for (std::size_t i = 0; i <= n; ++i) numerators[i] += sigma[i].shifted(-negative_total) * sign;
  }

  std::vector<RationalFunction> sums(n + 1);
  for (const auto& [magnitudes, numerators] : groups) {
    LaurentPolynomial denominator(Rational(1));
    for (Weight m : magnitudes)
      denominator = denominator * (LaurentPolynomial(Rational(1)) - LaurentPolynomial::monomial(Rational(1), m));
    for (std::size_t i = 0; i <= n; ++i)
      sums[i] = rf_add_and_reduce(sums[i], RationalFunction(numerators[i], denominator));
  }
  return sums;
}

IndexFormulaResult genus_via_index_formula(const FixedPointData& d) {
  const auto sums = index_formula_sums(d);
  GenusPolynomial gp;
  for (std::size_t i = 0; i < sums.size(); ++i) {
    const auto value = constant_value(sums[i]);
    if (!value) return NotConstant{static_cast<int>(i), sums[i]};
    // A constant sum is its limit at g -> 0, which is always (-1)^i N_i.
    if (!is_integer(*value) || !value->get_num().fits_slong_p())
      throw std::logic_error("index formula produced a non-integer constant");
    gp.coefficients.push_back(value->get_num().get_si());
  }
  return gp;
}

GenusSpecializations genus_specializations(const GenusPolynomial& gp) {
  GenusSpecializations s{0, 0, 0};
  if (!gp.coefficients.empty()) s.todd = gp.coefficients.front();
  for (std::size_t i = 0; i < gp.coefficients.size(); ++i) {
    s.signature += gp.coefficients[i];
    s.euler += (i % 2 == 0) ? gp.coefficients[i] : -gp.coefficients[i];
  }
  return s;
}

GenusPolynomial multiply(const GenusPolynomial& a, const GenusPolynomial& b) {
  if (a.coefficients.empty() || b.coefficients.empty()) return {};
  GenusPolynomial out{std::vector<std::int64_t>(a.coefficients.size() + b.coefficients.size() - 1, 0)};
  for (std::size_t i = 0; i < a.coefficients.size(); ++i)
    for (std::size_t j = 0; j < b.coefficients.size(); ++j)
      out.coefficients[i + j] += a.coefficients[i] * b.coefficients[j];
  return out;
}

}  // namespace equilocal
