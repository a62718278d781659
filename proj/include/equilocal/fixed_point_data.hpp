#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace equilocal {

/// Exponent of the circle action on one tangent direction at a fixed point.
using Weight = std::int64_t;

/// Largest accepted |weight|. Localization products are computed in GMP, but
/// exponents of g are machine integers, so weights stay well inside int64.
inline constexpr Weight kMaxWeightMagnitude = (Weight{1} << 31) - 1;

/// One isolated fixed point: a label and its weight multiset.
struct FixedPointDatum {
  std::string label;
  std::vector<Weight> weights;

  friend bool operator==(const FixedPointDatum&, const FixedPointDatum&) = default;
};

/// All fixed points of an action on a 2n-dimensional manifold.
///
/// Invariants, checked on construction: n >= 1, every point carries exactly n
/// nonzero weights, labels are unique.
class FixedPointData {
 public:
  /// Throws PreconditionViolation when an invariant fails.
  FixedPointData(int n, std::vector<FixedPointDatum> points);

  int n() const noexcept { return n_; }
  const std::vector<FixedPointDatum>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }

  friend bool operator==(const FixedPointData&, const FixedPointData&) = default;

 private:
  int n_;
  std::vector<FixedPointDatum> points_;
};

/// Coefficients chi^0..chi^n of the chi_y-genus.
struct GenusPolynomial {
  std::vector<std::int64_t> coefficients;

  int n() const noexcept { return static_cast<int>(coefficients.size()) - 1; }
  friend bool operator==(const GenusPolynomial&, const GenusPolynomial&) = default;
};

std::size_t negative_weight_count(const FixedPointDatum& p);
std::size_t positive_weight_count(const FixedPointDatum& p);
std::size_t count_weight(const FixedPointDatum& p, Weight w);

/// N_0..N_n: number of points with exactly i negative weights.
std::vector<std::int64_t> negative_count_profile(const FixedPointData& d);

/// Sorts weights within each point, sorts points lexicographically by weight
/// list, and relabels them p1..pk in that order. Idempotent.
FixedPointData canonical_form(const FixedPointData& d);

/// Parses the JSON interchange document
///   {"n": int, "points": [{"label": str, "weights": [int, ...]}, ...]}
/// Throws ParseError on malformed JSON or invariant violations.
FixedPointData parse_fixed_point_data(std::string_view document);

/// Canonical-form JSON document, keys sorted, two-space indent.
std::string serialize_fixed_point_data(const FixedPointData& d);

}  // namespace equilocal
