#include <doctest.h>

#include <tuple>

#include "equilocal/consistency.hpp"
#include "equilocal/examples.hpp"
#include "equilocal/genus.hpp"
#include "equilocal/multigraph.hpp"
#include "oracle.hpp"

using namespace equilocal;
namespace ex = equilocal::examples;

namespace {

std::vector<std::vector<Weight>> rows(const FixedPointData& d) { return oracle::shape(d); }

}  // namespace

TEST_CASE("sphere") {
  CHECK(rows(ex::sphere(1)) == std::vector<std::vector<Weight>>{{-1}, {1}});
  CHECK(rows(ex::sphere(3)) == std::vector<std::vector<Weight>>{{-3}, {3}});
  CHECK_THROWS_AS(ex::sphere(0), PreconditionViolation);
}

TEST_CASE("s6") {
  CHECK(rows(ex::s6(1, 1)) == std::vector<std::vector<Weight>>{{-2, 1, 1}, {-1, -1, 2}});
  CHECK(genus_specializations(genus_via_counts(ex::s6(1, 1))).euler == 2);
  CHECK(genus_via_counts(ex::s6(2, 5)) == GenusPolynomial{{0, -1, 1, 0}});
}

TEST_CASE("cp2") {
  CHECK(rows(ex::cp2(1, 1)) == std::vector<std::vector<Weight>>{{-2, -1}, {-1, 1}, {1, 2}});
  CHECK_THROWS_AS(ex::cp2(1, -1), PreconditionViolation);
}

TEST_CASE("hirzebruch congruence") {
  CHECK_NOTHROW(ex::hirzebruch(1, 1, 1, ex::HirzebruchVariant::I));
  CHECK_NOTHROW(ex::hirzebruch(1, 3, 2, ex::HirzebruchVariant::II));
  CHECK_THROWS_AS(ex::hirzebruch(1, 3, 2, ex::HirzebruchVariant::I), ex::InvalidCongruence);
  CHECK_THROWS_AS(ex::hirzebruch(1, 2, 2, ex::HirzebruchVariant::I), ex::InvalidCongruence);
  CHECK_THROWS_AS(ex::hirzebruch(1, 2, 2, ex::HirzebruchVariant::II), ex::InvalidCongruence);
}

TEST_CASE("hirzebruch graphs follow the variant") {
  // (5,2,3) meets only a = c mod b, (1,3,2) only a = -c mod b.
  const std::vector<std::tuple<Weight, Weight, Weight, ex::HirzebruchVariant>> cases{
      {5, 2, 3, ex::HirzebruchVariant::I}, {1, 3, 2, ex::HirzebruchVariant::II}};
  for (const auto& [a, b, c, v] : cases) {
    const auto d = ex::hirzebruch(a, b, c, v);
    const auto found = find_describing_multigraph(d);
    REQUIRE(found);
    CHECK(verify_lemma28(*found, d).passed());
    const auto hand = ex::hirzebruch_graph(a, b, c, v);
    CHECK(verify_lemma28(hand, reconstruct_data(hand)).passed());
  }
}

TEST_CASE("products") {
  // The four S^2 x S^6 weight lists {-b-c,a,b,c}, {-b,-c,a,b+c},
  // {-a,-b-c,b,c}, {-a,-b,-c,b+c} at (a,b,c) = (2,1,3).
  const FixedPointData expected(4, {{"w", {-4, 2, 1, 3}}, {"x", {-1, -3, 2, 4}}, {"y", {-2, -4, 1, 3}},
                                    {"z", {-2, -1, -3, 4}}});
  CHECK(ex::s2xs6(2, 1, 3) == canonical_form(expected));

  const auto s6s6 = ex::s6xs6(1, 2, 3, 4);
  CHECK(s6s6.n() == 6);
  CHECK(s6s6.size() == 4);
  CHECK(genus_via_counts(s6s6) == multiply(genus_via_counts(ex::s6(1, 2)), genus_via_counts(ex::s6(3, 4))));
}

TEST_CASE("examples pass every filter on a small grid") {
  std::vector<FixedPointData> data;
  for (Weight a = 1; a <= 3; ++a) {
    data.push_back(ex::sphere(a));
    for (Weight b = 1; b <= 3; ++b) {
      data.push_back(ex::s6(a, b));
      data.push_back(ex::cp2(a, b));
      for (Weight c = 1; c <= 3; ++c) {
        data.push_back(ex::s2xs6(a, b, c));
        for (auto v : {ex::HirzebruchVariant::I, ex::HirzebruchVariant::II}) {
          try {
            data.push_back(ex::hirzebruch(a, b, c, v));
          } catch (const ex::InvalidCongruence&) {
          }
        }
      }
    }
  }
  for (const auto& d : data) {
    for (const auto& r : run_all_filters(d)) {
      INFO(serialize_fixed_point_data(d) << r.name << ": " << r.witness);
      CHECK_FALSE(r.failed());
    }
    const auto g = find_describing_multigraph(d);
    REQUIRE(g);
    CHECK(verify_lemma28(*g, d).passed());
  }
}
