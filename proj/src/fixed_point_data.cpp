#include "equilocal/fixed_point_data.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "equilocal/errors.hpp"
#include "equilocal/json_io.hpp"

namespace equilocal {

FixedPointData::FixedPointData(int n, std::vector<FixedPointDatum> points)
    : n_(n), points_(std::move(points)) {
  if (n_ < 1) throw PreconditionViolation("n must be positive");
  std::set<std::string_view> labels;
  for (const auto& p : points_) {
    if (p.weights.size() != static_cast<std::size_t>(n_))
      throw PreconditionViolation("point '" + p.label + "' has " + std::to_string(p.weights.size()) +
                                  " weights, expected " + std::to_string(n_));
    for (Weight w : p.weights) {
      if (w == 0) throw PreconditionViolation("point '" + p.label + "' has a zero weight");
      if (w > kMaxWeightMagnitude || w < -kMaxWeightMagnitude)
        throw PreconditionViolation("point '" + p.label + "' has a weight out of range");
    }
    if (!labels.insert(p.label).second)
      throw PreconditionViolation("duplicate label '" + p.label + "'");
  }
}

std::size_t negative_weight_count(const FixedPointDatum& p) {
  return static_cast<std::size_t>(std::ranges::count_if(p.weights, [](Weight w) { return w < 0; }));
}

std::size_t positive_weight_count(const FixedPointDatum& p) {
  return static_cast<std::size_t>(std::ranges::count_if(p.weights, [](Weight w) { return w > 0; }));
}

std::size_t count_weight(const FixedPointDatum& p, Weight w) {
  return static_cast<std::size_t>(std::ranges::count(p.weights, w));
}

std::vector<std::int64_t> negative_count_profile(const FixedPointData& d) {
  std::vector<std::int64_t> profile(static_cast<std::size_t>(d.n()) + 1, 0);
  for (const auto& p : d.points()) ++profile[negative_weight_count(p)];
  return profile;
}

FixedPointData canonical_form(const FixedPointData& d) {
  std::vector<std::vector<Weight>> lists;
  lists.reserve(d.size());
  for (const auto& p : d.points()) {
    auto sorted = p.weights;
    std::ranges::sort(sorted);
    lists.push_back(std::move(sorted));
  }
  std::ranges::sort(lists);
  std::vector<FixedPointDatum> points;
  points.reserve(lists.size());
  for (std::size_t i = 0; i < lists.size(); ++i)
    points.push_back({"p" + std::to_string(i + 1), std::move(lists[i])});
  return FixedPointData(d.n(), std::move(points));
}

Json to_json(const FixedPointData& d) {
  Json points = Json::array();
  for (const auto& p : d.points()) points.push_back({{"label", p.label}, {"weights", p.weights}});
  return {{"n", d.n()}, {"points", std::move(points)}};
}

namespace {

const Json& require(const Json& object, const char* key, const std::string& where) {
  auto it = object.find(key);
  if (it == object.end()) throw ParseError(where, std::string("missing key '") + key + "'");
  return *it;
}

Weight to_weight(const Json& value, const std::string& where) {
  if (!value.is_number_integer()) throw ParseError(where, "weight must be an integer");
  if (value.is_number_unsigned() && value.get<std::uint64_t>() > static_cast<std::uint64_t>(kMaxWeightMagnitude))
    throw ParseError(where, "weight out of range");
  const auto w = value.get<std::int64_t>();
  if (w == 0) throw ParseError(where, "zero weight");
  if (w > kMaxWeightMagnitude || w < -kMaxWeightMagnitude) throw ParseError(where, "weight out of range");
  return w;
}

}  // namespace

FixedPointData fixed_point_data_from_json(const Json& document) {
  if (!document.is_object()) throw ParseError("/", "document must be an object");
  const Json& n_value = require(document, "n", "/");
  if (!n_value.is_number_integer() || n_value.get<std::int64_t>() < 1 ||
      n_value.get<std::int64_t>() > 1'000'000)
    throw ParseError("/n", "n must be a positive integer");
  const int n = n_value.get<int>();

  const Json& points_value = require(document, "points", "/");
  if (!points_value.is_array()) throw ParseError("/points", "points must be an array");

  std::vector<FixedPointDatum> points;
  std::set<std::string> labels;
  for (std::size_t i = 0; i < points_value.size(); ++i) {
    const std::string where = "/points/" + std::to_string(i);
    const Json& point = points_value[i];
    if (!point.is_object()) throw ParseError(where, "point must be an object");
    const Json& label = require(point, "label", where);
    if (!label.is_string()) throw ParseError(where + "/label", "label must be a string");
    const Json& weights = require(point, "weights", where);
    if (!weights.is_array()) throw ParseError(where + "/weights", "weights must be an array");
    if (weights.size() != static_cast<std::size_t>(n))
      throw ParseError(where + "/weights", "expected " + std::to_string(n) + " weights, found " +
                                               std::to_string(weights.size()));
    FixedPointDatum datum{label.get<std::string>(), {}};
    if (!labels.insert(datum.label).second)
      throw ParseError(where + "/label", "duplicate label '" + datum.label + "'");
    for (std::size_t j = 0; j < weights.size(); ++j)
      datum.weights.push_back(to_weight(weights[j], where + "/weights/" + std::to_string(j)));
    points.push_back(std::move(datum));
  }
  return FixedPointData(n, std::move(points));
}

FixedPointData parse_fixed_point_data(std::string_view document) {
  Json parsed;
  try {
    parsed = Json::parse(document);
  } catch (const Json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), e.what());
  }
  return fixed_point_data_from_json(parsed);
}

std::string serialize_fixed_point_data(const FixedPointData& d) {
  return to_json(canonical_form(d)).dump(2) + "\n";
}

}  // namespace equilocal
