#include "equilocal/multigraph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "equilocal/errors.hpp"
#include "equilocal/json_io.hpp"

namespace equilocal {

Multigraph::Multigraph(std::vector<std::string> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::set<std::string_view> known;
  for (const auto& v : vertices_)
    if (!known.insert(v).second) throw PreconditionViolation("duplicate vertex '" + v + "'");
  for (const auto& e : edges_) {
    if (!known.contains(e.from) || !known.contains(e.to))
      throw PreconditionViolation("edge " + e.from + "->" + e.to + " has an undeclared endpoint");
    if (e.weight < 1) throw PreconditionViolation("edge " + e.from + "->" + e.to + " has label < 1");
  }
}

bool Multigraph::has_loop() const {
  return std::ranges::any_of(edges_, [](const Edge& e) { return e.from == e.to; });
}

namespace {

std::map<std::string, std::vector<Weight>> incident_weights(const Multigraph& g) {
  std::map<std::string, std::vector<Weight>> at;
  for (const auto& v : g.vertices()) at[v];
  for (const auto& e : g.edges()) {
    at[e.from].push_back(e.weight);
    at[e.to].push_back(-e.weight);
  }
  for (auto& [v, weights] : at) std::ranges::sort(weights);
  return at;
}

std::vector<Weight> residues(const std::vector<Weight>& weights, Weight modulus) {
  std::vector<Weight> out;
  out.reserve(weights.size());
  for (Weight w : weights) out.push_back(((w % modulus) + modulus) % modulus);
  std::ranges::sort(out);
  return out;
}

std::string describe_edge(const Edge& e) {
  return e.from + "->" + e.to + " (" + std::to_string(e.weight) + ")";
}

}  // namespace

FixedPointData reconstruct_data(const Multigraph& g) {
  const auto at = incident_weights(g);
  std::vector<FixedPointDatum> points;
  std::size_t degree = 0;
  for (const auto& v : g.vertices()) {
    const auto& weights = at.at(v);
    if (points.empty()) degree = weights.size();
    if (weights.size() != degree || degree == 0)
      throw PreconditionViolation("vertex degrees must be equal and positive to form fixed-point data");
    points.push_back({v, weights});
  }
  if (points.empty()) throw PreconditionViolation("graph has no vertices");
  return FixedPointData(static_cast<int>(degree), std::move(points));
}

bool describes(const Multigraph& g, const FixedPointData& d) {
  std::set<std::string> labels;
  for (const auto& p : d.points()) labels.insert(p.label);
  if (labels != std::set<std::string>(g.vertices().begin(), g.vertices().end())) return false;
  const auto at = incident_weights(g);
  for (const auto& p : d.points()) {
    auto sorted = p.weights;
    std::ranges::sort(sorted);
    if (at.at(p.label) != sorted) return false;
  }
  return true;
}

std::optional<Weight> second_smallest_positive_weight(const FixedPointData& d) {
  std::vector<Weight> positives;
  for (const auto& p : d.points())
    for (Weight w : p.weights)
      if (w > 0) positives.push_back(w);
  if (positives.empty()) return std::nullopt;
  std::ranges::sort(positives);
  return positives.size() > 1 ? positives[1] : positives[0];
}

namespace {

// Whether an edge from point `from` to point `to` labeled w meets the level or
// congruence condition (whichever applies to w) and is not a loop.
struct EdgeRules {
  const FixedPointData& data;
  Weight threshold;
  std::vector<std::size_t> levels;

  EdgeRules(const FixedPointData& d, Weight second_smallest) : data(d), threshold(second_smallest) {
    for (const auto& p : d.points()) levels.push_back(negative_weight_count(p));
  }

  // Empty string when allowed, otherwise which condition fails.
  std::string violation(std::size_t from, std::size_t to, Weight w) const {
    if (from == to) return "loop";
    if (w <= threshold) {
      if (levels[from] + 1 != levels[to]) return "level";
    } else if (residues(data.points()[from].weights, w) != residues(data.points()[to].weights, w)) {
      return "congruence";
    }
    return {};
  }
};

// Kuhn's augmenting-path matching of +w slots onto -w slots.
bool augment(std::size_t source, const std::vector<std::vector<std::size_t>>& allowed,
             std::vector<bool>& visited, std::vector<std::optional<std::size_t>>& matched_source) {
  for (std::size_t target : allowed[source]) {
    if (visited[target]) continue;
    visited[target] = true;
    if (!matched_source[target] || augment(*matched_source[target], allowed, visited, matched_source)) {
      matched_source[target] = source;
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<Multigraph> find_describing_multigraph(const FixedPointData& d) {
  if (check_hattori(d).failed())
    throw PreconditionViolation("find_describing_multigraph needs data satisfying the Hattori pairing");
  std::vector<std::string> vertices;
  for (const auto& p : d.points()) vertices.push_back(p.label);
  const auto threshold = second_smallest_positive_weight(d);
  if (!threshold) return Multigraph(std::move(vertices), {});

  const EdgeRules rules(d, *threshold);
  std::set<Weight> labels;
  for (const auto& p : d.points())
    for (Weight w : p.weights)
      if (w > 0) labels.insert(w);

  // The conditions are per edge, so each label is an independent bipartite
  // matching between its +w and -w occurrences.
  std::vector<Edge> edges;
  for (Weight w : labels) {
    std::vector<std::size_t> sources, targets;
    for (std::size_t i = 0; i < d.size(); ++i) {
      sources.insert(sources.end(), count_weight(d.points()[i], w), i);
      targets.insert(targets.end(), count_weight(d.points()[i], -w), i);
    }
    std::vector<std::vector<std::size_t>> allowed(sources.size());
    for (std::size_t s = 0; s < sources.size(); ++s)
      for (std::size_t t = 0; t < targets.size(); ++t)
        if (rules.violation(sources[s], targets[t], w).empty()) allowed[s].push_back(t);

    std::vector<std::optional<std::size_t>> matched_source(targets.size());
    for (std::size_t s = 0; s < sources.size(); ++s) {
      std::vector<bool> visited(targets.size(), false);
      if (!augment(s, allowed, visited, matched_source)) return std::nullopt;
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t t = 0; t < targets.size(); ++t) pairs.emplace_back(sources[*matched_source[t]], targets[t]);
    std::ranges::sort(pairs);
    for (const auto& [s, t] : pairs) edges.push_back({vertices[s], vertices[t], w});
  }
  return Multigraph(std::move(vertices), std::move(edges));
}

FilterReport verify_lemma28(const Multigraph& g, const FixedPointData& d) {
  if (!describes(g, d)) return FilterReport::fail("lemma28", "graph does not describe the data");
  const auto threshold = second_smallest_positive_weight(d);
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < d.size(); ++i) index[d.points()[i].label] = i;
  const EdgeRules rules(d, threshold.value_or(0));
  for (const auto& e : g.edges()) {
    const std::string problem = rules.violation(index.at(e.from), index.at(e.to), e.weight);
    if (problem == "loop") return FilterReport::fail("lemma28", "property (3): loop at " + describe_edge(e));
    if (problem == "level")
      return FilterReport::fail("lemma28", "property (1): " + describe_edge(e) +
                                               " does not raise the negative-weight count by one");
    if (problem == "congruence")
      return FilterReport::fail("lemma28", "property (2): weights at the ends of " + describe_edge(e) +
                                               " differ modulo " + std::to_string(e.weight));
  }
  return FilterReport::pass("lemma28");
}

FilterReport check_describing_multigraph(const FixedPointData& d) {
  if (check_hattori(d).failed())
    return FilterReport::not_applicable("describing_multigraph", "Hattori pairing fails");
  if (!find_describing_multigraph(d))
    return FilterReport::fail("describing_multigraph", "no loop-free multigraph meets the level and congruence "
                                                       "conditions");
  return FilterReport::pass("describing_multigraph");
}

std::optional<int> figure1_shape(const Multigraph& g, const FixedPointData& d) {
  if (d.n() != 4 || d.size() != 4) return std::nullopt;
  if (negative_count_profile(d) != std::vector<std::int64_t>{1, 1, 0, 1, 1}) return std::nullopt;
  std::string bottom, third;
  for (const auto& p : d.points()) {
    const auto level = negative_weight_count(p);
    if (level == 0) bottom = p.label;
    if (level == 3) third = p.label;
  }
  return static_cast<int>(
      std::ranges::count_if(g.edges(), [&](const Edge& e) { return e.from == bottom && e.to == third; }));
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string emit_dot(const Multigraph& g) {
  auto vertices = g.vertices();
  std::ranges::sort(vertices);
  auto edges = g.edges();
  std::ranges::sort(edges);
  std::ostringstream os;
  os << "digraph multigraph {\n";
  for (const auto& v : vertices) os << "  " << dot_quote(v) << ";\n";
  for (const auto& e : edges)
    os << "  " << dot_quote(e.from) << " -> " << dot_quote(e.to) << " [label=\"" << e.weight << "\"];\n";
  os << "}\n";
  return os.str();
}

Json to_json(const Multigraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({{"from", e.from}, {"to", e.to}, {"w", e.weight}});
  return {{"vertices", g.vertices()}, {"edges", std::move(edges)}};
}

Multigraph multigraph_from_json(const Json& document) {
  if (!document.is_object() || !document.contains("vertices") || !document.contains("edges"))
    throw ParseError("/", "multigraph needs 'vertices' and 'edges'");
  const Json& vertices = document.at("vertices");
  const Json& edges = document.at("edges");
  if (!vertices.is_array()) throw ParseError("/vertices", "must be an array");
  if (!edges.is_array()) throw ParseError("/edges", "must be an array");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!vertices[i].is_string()) throw ParseError("/vertices/" + std::to_string(i), "must be a string");
    names.push_back(vertices[i].get<std::string>());
  }
  std::vector<Edge> parsed;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "/edges/" + std::to_string(i);
    const Json& e = edges[i];
    if (!e.is_object() || !e.contains("from") || !e.contains("to") || !e.contains("w"))
      throw ParseError(where, "edge needs 'from', 'to' and 'w'");
    if (!e.at("from").is_string() || !e.at("to").is_string()) throw ParseError(where, "endpoints must be strings");
    if (!e.at("w").is_number_integer() || e.at("w").get<std::int64_t>() < 1 ||
        e.at("w").get<std::int64_t>() > kMaxWeightMagnitude)
      throw ParseError(where + "/w", "label must be a positive integer");
    parsed.push_back({e.at("from").get<std::string>(), e.at("to").get<std::string>(), e.at("w").get<Weight>()});
  }
  try {
    return Multigraph(std::move(names), std::move(parsed));
  } catch (const PreconditionViolation& err) {
    throw ParseError("/", err.what());
  }
}

Json to_json(const FilterReport& report) {
  return {{"name", report.name}, {"status", to_string(report.status)}, {"witness", report.witness}};
}

}  // namespace equilocal
