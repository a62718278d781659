#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "equilocal/consistency.hpp"
#include "equilocal/fixed_point_data.hpp"
#include "equilocal/localization.hpp"

namespace equilocal {

/// Canonical fixed-point data of every loop-free multigraph on `points`
/// vertices in which each vertex has total degree n and every label lies in
/// 1..max_weight. Each canonical form appears once; output is sorted.
std::vector<FixedPointData> enumerate_candidates(Weight max_weight, int points = 4, int n = 4);

/// Filter names in the order the search applies them; a candidate is
/// attributed to the first filter it fails.
const std::vector<std::string>& search_filter_order();

/// Runs the search pipeline on one datum. Returns the name of the first
/// failing filter, or an empty string when every filter passes.
std::string first_failing_filter(const FixedPointData& d);

struct Survivor {
  FixedPointData data;
  GenusPolynomial genus;
  ChernNumbersDim8 chern;
  bool weights_agree_up_to_sign;
};

struct SearchReport {
  Weight weight_bound = 0;
  std::uint64_t candidates_enumerated = 0;
  std::vector<Survivor> survivors;
  std::map<std::string, std::uint64_t> eliminated_by;

  std::uint64_t eliminated_total() const;
};

struct SearchOptions {
  Weight max_weight = 1;
  unsigned jobs = 1;
  /// Called with human-readable progress lines; may be empty.
  std::function<void(std::string_view)> progress;
};

/// Enumerates, filters and annotates; never throws on findings.
SearchReport run_search(const SearchOptions& options);

/// A survivor contradicting the expected outcome: either it has the genus
/// 1 - y - y^3 + y^4, or its genus or Chern numbers differ from S^2 x S^6.
struct Breach {
  FixedPointData data;
  std::string reason;
};

std::vector<Breach> find_breaches(const SearchReport& report);

class AssertionBreach : public std::runtime_error {
 public:
  AssertionBreach(SearchReport report, std::vector<Breach> breaches);

  const SearchReport& report() const noexcept { return report_; }
  const std::vector<Breach>& breaches() const noexcept { return breaches_; }

 private:
  SearchReport report_;
  std::vector<Breach> breaches_;
};

/// run_search followed by find_breaches; throws AssertionBreach when any
/// survivor contradicts the expected outcome.
SearchReport case_elimination_report(const SearchOptions& options);

}  // namespace equilocal
