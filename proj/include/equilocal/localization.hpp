#pragma once

#include <array>
#include <string>
#include <vector>

#include "equilocal/fixed_point_data.hpp"
#include "equilocal/rational.hpp"

namespace equilocal {

/// A Chern monomial c_{j1} c_{j2} ... c_{jk}, stored as its sorted parts.
class ChernPartition {
 public:
  /// Throws PreconditionViolation for an empty list or a part < 1.
  explicit ChernPartition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int degree() const noexcept { return degree_; }
  int largest_part() const noexcept { return parts_.back(); }

  /// e.g. "c1^2*c2".
  std::string to_string() const;

  friend bool operator==(const ChernPartition&, const ChernPartition&) = default;

 private:
  std::vector<int> parts_;
  int degree_ = 0;
};

/// All partitions of `degree` into parts <= max_part, in lexicographic order
/// of their descending part lists, reversed (so {1,1,...} comes first).
std::vector<ChernPartition> partitions_of(int degree, int max_part);

/// ABBV localization at isolated fixed points with the equivariant parameter
/// factored out:
///   sum_p  prod_{j in lambda} sigma_j(w_p) / prod_i w_{p,i}.
/// For data coming from a manifold this is the Chern number when
/// degree(lambda) == n, and it is the coefficient of t^{degree-n} (so it must
/// vanish) when degree(lambda) < n.
/// Throws PreconditionViolation when a part exceeds n.
Rational localization_sum(const FixedPointData& d, const ChernPartition& lambda);

struct ChernNumbersDim8 {
  Rational c1_4;
  Rational c1sq_c2;
  Rational c2_sq;
  Rational c1_c3;
  Rational c4;

  friend bool operator==(const ChernNumbersDim8&, const ChernNumbersDim8&) = default;
};

/// The five Chern numbers of an 8-manifold; requires n == 4.
ChernNumbersDim8 chern_numbers_dim8(const FixedPointData& d);

/// chi^0, chi^1, chi^2 from the Todd-type polynomials T_0^4, T_1^4, T_2^4
/// evaluated on the Chern numbers.
std::array<Rational, 3> ty_genus_from_chern(const ChernNumbersDim8& c);

}  // namespace equilocal
