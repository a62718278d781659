#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "equilocal/fixed_point_data.hpp"
#include "equilocal/rational_function.hpp"

namespace equilocal {

/// chi^i = (-1)^i N_i, read off the negative-weight counts.
GenusPolynomial genus_via_counts(const FixedPointData& d);

/// For each i in 0..n, the exact sum over fixed points of
///   sigma_i(g^w_1, ..., g^w_n) / prod_j (1 - g^w_j)
/// in canonical form. Data realized by a manifold makes every entry constant.
std::vector<RationalFunction> index_formula_sums(const FixedPointData& d);

/// The i-th index sum failed to reduce to a constant; the data cannot come
/// from a manifold.
struct NotConstant {
  int index;
  RationalFunction value;
};

using IndexFormulaResult = std::variant<GenusPolynomial, NotConstant>;

/// The genus from the rational-function side of the index formula. Reports the
/// first index whose sum is not constant.
IndexFormulaResult genus_via_index_formula(const FixedPointData& d);

struct GenusSpecializations {
  std::int64_t todd;       // chi_y at y = 0
  std::int64_t signature;  // chi_y at y = 1
  std::int64_t euler;      // chi_y at y = -1

  friend bool operator==(const GenusSpecializations&, const GenusSpecializations&) = default;
};

GenusSpecializations genus_specializations(const GenusPolynomial& gp);

/// Product of genus polynomials (coefficient convolution).
GenusPolynomial multiply(const GenusPolynomial& a, const GenusPolynomial& b);

}  // namespace equilocal
