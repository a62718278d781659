#include "equilocal/examples.hpp"

#include <initializer_list>

#include "equilocal/errors.hpp"

namespace equilocal::examples {

namespace {

void require_positive(std::initializer_list<Weight> params) {
  for (Weight p : params)
    if (p < 1) throw PreconditionViolation("example parameters must be positive integers");
}

FixedPointData make(int n, std::vector<std::vector<Weight>> weight_lists) {
  std::vector<FixedPointDatum> points;
  for (std::size_t i = 0; i < weight_lists.size(); ++i)
    points.push_back({"p" + std::to_string(i + 1), std::move(weight_lists[i])});
  return canonical_form(FixedPointData(n, std::move(points)));
}

}  // namespace

FixedPointData sphere(Weight a) {
  require_positive({a});
  return make(1, {{-a}, {a}});
}

FixedPointData s6(Weight b, Weight c) {
  require_positive({b, c});
  return make(3, {{-b - c, b, c}, {-b, -c, b + c}});
}

FixedPointData cp2(Weight a, Weight b) {
  require_positive({a, b});
  return make(2, {{a + b, a}, {-a, b}, {-b, -a - b}});
}

FixedPointData hirzebruch(Weight a, Weight b, Weight c, HirzebruchVariant variant) {
  require_positive({a, b, c});
  const bool holds = variant == HirzebruchVariant::I ? (a - c) % b == 0 : (a + c) % b == 0;
  if (!holds)
    throw InvalidCongruence(std::string("hirzebruch variant ") + (variant == HirzebruchVariant::I ? "I" : "II") +
                            " needs a = " + (variant == HirzebruchVariant::I ? "" : "-") + "c mod b");
  return make(2, {{a, b}, {-a, b}, {-b, c}, {-b, -c}});
}

FixedPointData product(const FixedPointData& first, const FixedPointData& second) {
  std::vector<FixedPointDatum> points;
  for (const auto& p : first.points()) {
    for (const auto& q : second.points()) {
      FixedPointDatum pair{p.label + "," + q.label, p.weights};
      pair.weights.insert(pair.weights.end(), q.weights.begin(), q.weights.end());
      points.push_back(std::move(pair));
    }
  }
  return canonical_form(FixedPointData(first.n() + second.n(), std::move(points)));
}

FixedPointData s2xs6(Weight a, Weight b, Weight c) {
  return product(sphere(a), s6(b, c));
}

FixedPointData s6xs6(Weight a1, Weight b1, Weight a2, Weight b2) {
  return product(s6(a1, b1), s6(a2, b2));
}

Multigraph sphere_graph(Weight a) {
  require_positive({a});
  return Multigraph({"p1", "p2"}, {{"p1", "p2", a}});
}

Multigraph s6_graph(Weight b, Weight c) {
  require_positive({b, c});
  return Multigraph({"p1", "p2"}, {{"p1", "p2", c}, {"p1", "p2", b}, {"p2", "p1", b + c}});
}

Multigraph cp2_graph(Weight a, Weight b) {
  require_positive({a, b});
  return Multigraph({"p1", "p2", "p3"}, {{"p1", "p2", a}, {"p2", "p3", b}, {"p1", "p3", a + b}});
}

Multigraph hirzebruch_graph(Weight a, Weight b, Weight c, HirzebruchVariant variant) {
  require_positive({a, b, c});
  if (variant == HirzebruchVariant::I)
    return Multigraph({"p1", "p2", "p3", "p4"},
                      {{"p1", "p2", a}, {"p1", "p3", b}, {"p2", "p4", b}, {"p3", "p4", c}});
  return Multigraph({"p1", "p2", "p3", "p4"},
                    {{"p1", "p2", a}, {"p1", "p4", b}, {"p2", "p3", b}, {"p3", "p4", c}});
}

Multigraph product_graph(const Multigraph& first, const Multigraph& second) {
  auto join = [](const std::string& p, const std::string& q) { return p + "," + q; };
  std::vector<std::string> vertices;
  for (const auto& p : first.vertices())
    for (const auto& q : second.vertices()) vertices.push_back(join(p, q));
  std::vector<Edge> edges;
  for (const auto& e : first.edges())
    for (const auto& q : second.vertices()) edges.push_back({join(e.from, q), join(e.to, q), e.weight});
  for (const auto& p : first.vertices())
    for (const auto& e : second.edges()) edges.push_back({join(p, e.from), join(p, e.to), e.weight});
  return Multigraph(std::move(vertices), std::move(edges));
}

}  // namespace equilocal::examples
