#include <doctest.h>

#include "equilocal/examples.hpp"
#include "equilocal/genus.hpp"
#include "oracle.hpp"

using namespace equilocal;
namespace ex = equilocal::examples;

namespace {

GenusPolynomial gp(std::vector<std::int64_t> c) { return {std::move(c)}; }

}  // namespace

TEST_CASE("genus_via_counts") {
  CHECK(genus_via_counts(ex::s2xs6(1, 1, 1)) == gp({0, -1, 2, -1, 0}));
  CHECK(genus_via_counts(ex::cp2(1, 1)) == gp({1, -1, 1}));
  CHECK(genus_via_counts(FixedPointData(3, {{"p", {-3, 1, 2}}, {"q", {-1, -2, 3}}})) == gp({0, -1, 1, 0}));
  for (Weight a = 1; a <= 4; ++a) CHECK(genus_via_counts(ex::sphere(a)) == gp({1, -1}));
}

TEST_CASE("index formula on S^2 with speed 2") {
  const FixedPointData d(1, {{"N", {2}}, {"S", {-2}}});
  const auto sums = index_formula_sums(d);
  REQUIRE(sums.size() == 2);
  CHECK(constant_value(sums[0]) == Rational(1));
  const auto result = genus_via_index_formula(d);
  REQUIRE(std::holds_alternative<GenusPolynomial>(result));
  CHECK(std::get<GenusPolynomial>(result) == gp({1, -1}));
}

TEST_CASE("index formula agrees with counts on S^2 x S^6") {
  const auto d = ex::s2xs6(1, 1, 1);
  const auto result = genus_via_index_formula(d);
  REQUIRE(std::holds_alternative<GenusPolynomial>(result));
  CHECK(std::get<GenusPolynomial>(result) == gp({0, -1, 2, -1, 0}));
}

TEST_CASE("index formula rejects {(1),(1)} at i = 0") {
  const FixedPointData d(1, {{"p", {1}}, {"q", {1}}});
  const auto result = genus_via_index_formula(d);
  REQUIRE(std::holds_alternative<NotConstant>(result));
  CHECK(std::get<NotConstant>(result).index == 0);
  // Oracle: the sum is 2/(1-g), so its values at g = 2 and g = 3 differ.
  CHECK(oracle::index_sum_at(d, 0, Rational(2)) == Rational(-2));
  CHECK(oracle::index_sum_at(d, 0, Rational(3)) == Rational(-1));
}

TEST_CASE("index formula sums match point evaluation") {
  const std::vector<FixedPointData> data{ex::cp2(2, 3), ex::hirzebruch(3, 2, 1, ex::HirzebruchVariant::I),
                                         ex::s2xs6(2, 1, 3), ex::s6(1, 4)};
  for (const auto& d : data) {
    const auto sums = index_formula_sums(d);
    REQUIRE(sums.size() == static_cast<std::size_t>(d.n()) + 1);
    for (int i = 0; i <= d.n(); ++i) {
      const auto value = constant_value(sums[static_cast<std::size_t>(i)]);
      REQUIRE(value);
      CHECK(*value == oracle::index_sum_at(d, i, Rational(2)));
      CHECK(*value == oracle::index_sum_at(d, i, Rational(-5, 3)));
      CHECK(*value == oracle::genus_by_tally(d)[static_cast<std::size_t>(i)]);
    }
  }
}

TEST_CASE("non-realizable data fails constancy where evaluation disagrees") {
  // Hattori holds but the data is not a manifold's: N-profile (2,0,0).
  const FixedPointData d(2, {{"a", {1, 2}}, {"b", {-1, -2}}, {"c", {1, 2}}, {"d", {-1, -2}}});
  const auto result = genus_via_index_formula(d);
  const bool evaluations_differ = oracle::index_sum_at(d, 0, Rational(2)) != oracle::index_sum_at(d, 0, Rational(3));
  CHECK(std::holds_alternative<NotConstant>(result) == evaluations_differ);
}

TEST_CASE("genus_specializations") {
  CHECK(genus_specializations(gp({0, -1, 2, -1, 0})) == GenusSpecializations{0, 0, 4});
  CHECK(genus_specializations(gp({1, -1, 1})) == GenusSpecializations{1, 1, 3});
  CHECK(genus_specializations(gp({1, -1})) == GenusSpecializations{1, 0, 2});
}

TEST_CASE("genus is multiplicative under products") {
  const auto s2 = ex::sphere(2);
  const auto s6 = ex::s6(1, 3);
  const auto prod = ex::product(s2, s6);
  CHECK(genus_via_counts(prod) == multiply(genus_via_counts(s2), genus_via_counts(s6)));
  const auto a = genus_via_index_formula(s2);
  const auto b = genus_via_index_formula(s6);
  const auto c = genus_via_index_formula(prod);
  REQUIRE(std::holds_alternative<GenusPolynomial>(c));
  CHECK(std::get<GenusPolynomial>(c) == multiply(std::get<GenusPolynomial>(a), std::get<GenusPolynomial>(b)));
}

TEST_CASE("euler specialization counts fixed points") {
  for (const auto& d : {ex::s6xs6(1, 2, 2, 1), ex::cp2(1, 3), ex::hirzebruch(1, 1, 1, ex::HirzebruchVariant::II)})
    CHECK(genus_specializations(genus_via_counts(d)).euler == static_cast<std::int64_t>(d.size()));
}
