#pragma once

// JSON conversions for the interchange formats. Kept apart from the core
// headers so that only I/O code pulls in nlohmann/json.

#include <json.hpp>

#include "equilocal/fixed_point_data.hpp"
#include "equilocal/localization.hpp"
#include "equilocal/multigraph.hpp"
#include "equilocal/search.hpp"

namespace equilocal {

using Json = nlohmann::json;

/// Data as written (no canonicalization).
Json to_json(const FixedPointData& d);

/// Validating conversion; throws ParseError with a JSON pointer location.
FixedPointData fixed_point_data_from_json(const Json& document);

/// {"vertices": [str], "edges": [{"from": str, "to": str, "w": int}]}
Json to_json(const Multigraph& g);
Multigraph multigraph_from_json(const Json& document);

Json to_json(const FilterReport& report);

/// Chern numbers keyed by monomial ("c1^4", ...), values as exact strings.
Json to_json(const ChernNumbersDim8& c);

/// Full search report: counts per filter, survivors in canonical form, the
/// two assertions, any breaches and the agreement probe tally.
Json to_json(const SearchReport& report, const std::vector<Breach>& breaches);

}  // namespace equilocal
