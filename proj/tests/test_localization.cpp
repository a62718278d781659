#include <doctest.h>

#include "equilocal/errors.hpp"
#include "equilocal/examples.hpp"
#include "equilocal/genus.hpp"
#include "equilocal/localization.hpp"
#include "oracle.hpp"

using namespace equilocal;
namespace ex = equilocal::examples;

TEST_CASE("ChernPartition") {
  const ChernPartition p({2, 1, 1});
  CHECK(p.parts() == std::vector<int>{1, 1, 2});
  CHECK(p.degree() == 4);
  CHECK(p.largest_part() == 2);
  CHECK(p.to_string() == "c1^2*c2");
  CHECK(ChernPartition({4}).to_string() == "c4");
  CHECK_THROWS_AS(ChernPartition({}), PreconditionViolation);
  CHECK_THROWS_AS(ChernPartition({0, 1}), PreconditionViolation);
}

TEST_CASE("partitions_of") {
  CHECK(partitions_of(4, 4).size() == 5);
  CHECK(partitions_of(4, 2).size() == 3);
  CHECK(partitions_of(6, 6).size() == 11);
  for (const auto& p : partitions_of(5, 3)) {
    CHECK(p.degree() == 5);
    CHECK(p.largest_part() <= 3);
  }
}

TEST_CASE("localization sums on S^2 x S^6(1,1,1)") {
  const auto d = ex::s2xs6(1, 1, 1);
  CHECK(localization_sum(d, ChernPartition({4})) == 4);
  CHECK(localization_sum(d, ChernPartition({1, 1, 1, 1})) == 0);
  CHECK(localization_sum(d, ChernPartition({2})) == 0);
  CHECK_THROWS_AS(localization_sum(ex::cp2(1, 1), ChernPartition({3})), PreconditionViolation);
}

TEST_CASE("classical surfaces by hand substitution") {
  // cp2(1,1): weights {2,1}, {-1,1}, {-1,-2}; c1^2 = (w1+w2)^2 / (w1 w2)
  // per point = 9/2 + 0/(-1) + 9/2 = 9.
  CHECK(localization_sum(ex::cp2(1, 1), ChernPartition({1, 1})) == 9);
  // hirzebruch(1,1,1,I): {1,1}, {-1,1}, {-1,1}, {-1,-1} gives 4 + 0 + 0 + 4.
  const auto h = ex::hirzebruch(1, 1, 1, ex::HirzebruchVariant::I);
  CHECK(localization_sum(h, ChernPartition({1, 1})) == 8);
  CHECK(localization_sum(h, ChernPartition({2})) == 4);
  for (Weight a = 1; a <= 4; ++a)
    for (Weight b = 1; b <= 4; ++b) CHECK(localization_sum(ex::cp2(a, b), ChernPartition({2})) == 3);
}

TEST_CASE("chern_numbers_dim8") {
  const ChernNumbersDim8 expected{Rational(0), Rational(0), Rational(0), Rational(4), Rational(4)};
  CHECK(chern_numbers_dim8(ex::s2xs6(1, 1, 1)) == expected);
  CHECK(chern_numbers_dim8(ex::s2xs6(2, 1, 3)) == expected);
  CHECK(chern_numbers_dim8(ex::product(ex::sphere(1), ex::s6(1, 1))) == chern_numbers_dim8(ex::s2xs6(1, 1, 1)));
  CHECK_THROWS_AS(chern_numbers_dim8(ex::cp2(1, 1)), PreconditionViolation);
}

TEST_CASE("localization agrees with the Newton-identity oracle") {
  const std::vector<FixedPointData> data{ex::s2xs6(3, 1, 2), ex::s6xs6(1, 2, 2, 3), ex::cp2(2, 5),
                                         ex::hirzebruch(5, 2, 1, ex::HirzebruchVariant::I)};
  for (const auto& d : data)
    for (int degree = 1; degree <= d.n(); ++degree)
      for (const auto& lambda : partitions_of(degree, d.n()))
        CHECK(localization_sum(d, lambda) == oracle::chern_number(d, lambda.parts()));
}

TEST_CASE("ty_genus_from_chern") {
  const auto t = ty_genus_from_chern({Rational(0), Rational(0), Rational(0), Rational(4), Rational(4)});
  CHECK(t[0] == 0);
  CHECK(t[1] == -1);
  CHECK(t[2] == 2);
  const auto z = ty_genus_from_chern({Rational(0), Rational(0), Rational(0), Rational(0), Rational(0)});
  CHECK((z[0] == 0 && z[1] == 0 && z[2] == 0));

  const auto d = ex::s2xs6(1, 2, 5);
  const auto from_chern = ty_genus_from_chern(chern_numbers_dim8(d));
  const auto counts = genus_via_counts(d);
  for (std::size_t i = 0; i < 3; ++i) CHECK(from_chern[i] == counts.coefficients[i]);
}

TEST_CASE("ty_genus_from_chern matches counts on other 8-dimensional products") {
  // Products of two 4-dimensional examples, so that c1^4 etc. are nonzero.
  const auto s2 = ex::sphere(1);
  const std::vector<FixedPointData> data{
      ex::product(ex::cp2(1, 2), ex::cp2(2, 1)),
      ex::product(ex::hirzebruch(1, 1, 1, ex::HirzebruchVariant::I), ex::cp2(1, 1)),
      ex::product(ex::product(s2, ex::sphere(2)), ex::cp2(1, 3)),
  };
  for (const auto& d : data) {
    const auto t = ty_genus_from_chern(chern_numbers_dim8(d));
    const auto counts = genus_via_counts(d);
    for (std::size_t i = 0; i < 3; ++i) CHECK(t[i] == counts.coefficients[i]);
  }
}
