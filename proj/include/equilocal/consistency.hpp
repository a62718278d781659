#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "equilocal/errors.hpp"
#include "equilocal/fixed_point_data.hpp"
#include "equilocal/rational.hpp"

namespace equilocal {

// Every check here is a necessary condition for fixed-point data of a circle
// action on a compact almost complex manifold. A failure certifies that no
// such manifold exists; a pass certifies nothing.

enum class FilterStatus { pass, fail, not_applicable };

const char* to_string(FilterStatus status);

struct FilterReport {
  std::string name;
  FilterStatus status = FilterStatus::pass;
  /// The violating object for failures; the unmet hypothesis for
  /// not_applicable; empty on a pass.
  std::string witness;

  bool passed() const noexcept { return status == FilterStatus::pass; }
  bool failed() const noexcept { return status == FilterStatus::fail; }

  static FilterReport pass(std::string name) { return {std::move(name), FilterStatus::pass, {}}; }
  static FilterReport fail(std::string name, std::string witness) {
    return {std::move(name), FilterStatus::fail, std::move(witness)};
  }
  static FilterReport not_applicable(std::string name, std::string reason) {
    return {std::move(name), FilterStatus::not_applicable, std::move(reason)};
  }
};

/// Thrown by checks that need at least one weight.
class EmptyData : public PreconditionViolation {
 public:
  using PreconditionViolation::PreconditionViolation;
};

/// For every w, the total multiplicity of w equals that of -w.
FilterReport check_hattori(const FixedPointData& d);

/// The sum of all weights over all points is zero.
FilterReport check_weight_sum_zero(const FixedPointData& d);

/// N_i == N_{n-i} for all i.
FilterReport check_count_symmetry(const FixedPointData& d);

/// For a in {smallest, second smallest positive weight}: occurrences of +a at
/// points with i negative weights match occurrences of -a at points with i+1.
/// Throws EmptyData when there are no fixed points.
FilterReport check_small_weight_pairing(const FixedPointData& d);

/// Some i has N_i != 0 and N_{i+1} != 0.
FilterReport check_adjacent_counts(const FixedPointData& d);

/// When the per-point weight sums take at most n values, the reciprocal
/// weight products of each sum level add to zero. not_applicable otherwise.
FilterReport check_reciprocal_sums(const FixedPointData& d);

/// When every weight is +w or -w for one w, N_k = N_0 * binom(n, k).
FilterReport check_binomial_profile(const FixedPointData& d);

struct DichotomyCase1 {};

/// Points split into (first[0], first[1]) with weight sum s and opposite
/// products, and (second[0], second[1]) with sum -s and opposite products.
/// Indices refer to d.points().
struct DichotomyCase2 {
  std::array<std::size_t, 2> first;
  std::array<std::size_t, 2> second;
  Weight sum;
  std::array<Integer, 2> first_products;
  std::array<Integer, 2> second_products;
};

struct DichotomyFail {
  std::string reason;
};

using Dichotomy = std::variant<DichotomyCase1, DichotomyCase2, DichotomyFail>;

/// The two-case structure forced on four fixed points when n >= 4.
/// Throws PreconditionViolation unless n >= 4 and there are exactly 4 points.
Dichotomy classify_dichotomy(const FixedPointData& d);

/// classify_dichotomy as a report; not_applicable outside its preconditions.
FilterReport check_dichotomy(const FixedPointData& d);

/// Tangent data of the fixed sets of the finite subgroups Z_w (w >= 2): the
/// points must split into components whose sub-weight multisets are
/// consistent with the known classifications of actions with few fixed
/// points. Configurations outside those classifications pass.
FilterReport check_isotropy_restrictions(const FixedPointData& d);

/// Localization sums of every Chern monomial of degree < n vanish.
FilterReport check_localization_vanishing(const FixedPointData& d);

/// Localization sums of every Chern monomial of degree n are integers.
FilterReport check_chern_integrality(const FixedPointData& d);

/// Every index-formula sum reduces to a constant equal to (-1)^i N_i.
FilterReport check_index_formula(const FixedPointData& d);

/// True iff all points have the same multiset of |weights|.
bool weights_agree_up_to_sign(const FixedPointData& d);

/// Every check above, in a fixed order, without short-circuiting.
std::vector<FilterReport> run_all_filters(const FixedPointData& d);

}  // namespace equilocal
