#pragma once

#include <stdexcept>

#include "equilocal/fixed_point_data.hpp"
#include "equilocal/multigraph.hpp"

namespace equilocal::examples {

// Fixed-point data of concrete circle actions. Every generator returns
// canonical_form output and throws PreconditionViolation for a parameter < 1.

/// Rotation of S^2 with speed a: weights {-a} and {a}.
FixedPointData sphere(Weight a);

/// Two-fixed-point action on S^6: {-b-c, b, c} and {-b, -c, b+c}.
FixedPointData s6(Weight b, Weight c);

/// Linear action on CP^2: {a+b, a}, {-a, b}, {-b, -a-b}.
FixedPointData cp2(Weight a, Weight b);

enum class HirzebruchVariant { I, II };

class InvalidCongruence : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Hirzebruch-surface type: {a, b}, {-a, b}, {-b, c}, {-b, -c}. Variant I
/// needs a = c mod b, variant II needs a = -c mod b; InvalidCongruence
/// otherwise.
FixedPointData hirzebruch(Weight a, Weight b, Weight c, HirzebruchVariant variant);

/// Diagonal action on a product: one point per pair, weights concatenated.
FixedPointData product(const FixedPointData& first, const FixedPointData& second);

/// product(sphere(a), s6(b, c)).
FixedPointData s2xs6(Weight a, Weight b, Weight c);

/// product(s6(a1, b1), s6(a2, b2)).
FixedPointData s6xs6(Weight a1, Weight b1, Weight a2, Weight b2);

// Describing multigraphs of the same actions, with vertex labels p1, p2, ...
// (products use "p,q"). canonical_form(reconstruct_data(g)) matches the
// generator above.

Multigraph sphere_graph(Weight a);
Multigraph s6_graph(Weight b, Weight c);
Multigraph cp2_graph(Weight a, Weight b);
Multigraph hirzebruch_graph(Weight a, Weight b, Weight c, HirzebruchVariant variant);
Multigraph product_graph(const Multigraph& first, const Multigraph& second);

}  // namespace equilocal::examples
