#pragma once

#include <optional>
#include <string>
#include <vector>

#include "equilocal/consistency.hpp"
#include "equilocal/fixed_point_data.hpp"

namespace equilocal {

struct Edge {
  std::string from;
  std::string to;
  Weight weight;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Labeled directed multigraph. Vertices are fixed-point labels; an edge
/// from p to q with label w stands for weight w at p and weight -w at q.
class Multigraph {
 public:
  Multigraph() = default;
  /// Throws PreconditionViolation for duplicate vertices, unknown endpoints
  /// or labels < 1.
  Multigraph(std::vector<std::string> vertices, std::vector<Edge> edges);

  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool has_loop() const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
};

/// The fixed-point data the graph encodes: at each vertex, out-edge labels
/// and negated in-edge labels. Points follow the vertex order. Throws
/// PreconditionViolation unless every vertex has the same positive degree.
FixedPointData reconstruct_data(const Multigraph& g);

/// True iff the vertex set equals the label set of d and every point's weight
/// multiset is reproduced by its incident edges.
bool describes(const Multigraph& g, const FixedPointData& d);

/// Second smallest positive weight of d, counted with multiplicity (it equals
/// the smallest when that occurs twice). The smallest when only one positive
/// weight occurs; nullopt when there is none.
std::optional<Weight> second_smallest_positive_weight(const FixedPointData& d);

/// A loop-free describing graph whose edges satisfy the level condition
/// (labels up to the second smallest positive weight join a point with k
/// negative weights to one with k+1) and the congruence condition (larger
/// labels join points whose weights agree modulo the label). nullopt means no
/// such graph exists, which rules the data out.
/// Throws PreconditionViolation when d fails the Hattori pairing.
std::optional<Multigraph> find_describing_multigraph(const FixedPointData& d);

/// Checks the level, congruence and loop-free conditions edge by edge.
FilterReport verify_lemma28(const Multigraph& g, const FixedPointData& d);

/// find_describing_multigraph as a report.
FilterReport check_describing_multigraph(const FixedPointData& d);

/// For n = 4 data with four points and N profile (1,1,0,1,1): the number of
/// edges from the point with no negative weight to the point with three.
/// nullopt otherwise.
std::optional<int> figure1_shape(const Multigraph& g, const FixedPointData& d);

/// Deterministic Graphviz digraph: vertices sorted, then edges sorted by
/// (from, to, label); edge labels are the weights.
std::string emit_dot(const Multigraph& g);

}  // namespace equilocal
