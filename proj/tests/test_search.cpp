#include <doctest.h>

#include <set>

#include "equilocal/examples.hpp"
#include "equilocal/genus.hpp"
#include "equilocal/json_io.hpp"
#include "equilocal/search.hpp"
#include "oracle.hpp"

using namespace equilocal;
namespace ex = equilocal::examples;

namespace {

std::set<std::vector<std::vector<Weight>>> shapes_of(const std::vector<FixedPointData>& data) {
  std::set<std::vector<std::vector<Weight>>> out;
  for (const auto& d : data) out.insert(oracle::shape(d));
  return out;
}

const SearchReport& report_at(Weight w) {
  static std::map<Weight, SearchReport> cache;
  auto it = cache.find(w);
  if (it == cache.end()) it = cache.emplace(w, run_search({w, 2, {}})).first;
  return it->second;
}

}  // namespace

TEST_CASE("enumeration matches brute force") {
  for (Weight w = 1; w <= 2; ++w) {
    const auto candidates = enumerate_candidates(w);
    const auto brute = oracle::brute_force_shapes(w);
    CHECK(shapes_of(candidates) == brute);
    CHECK(candidates.size() == brute.size());
  }
  // Regression fixture: the W=1 count.
  CHECK(enumerate_candidates(1).size() == 8);
}

TEST_CASE("enumeration is canonical, sorted and Hattori by construction") {
  const auto candidates = enumerate_candidates(2);
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    CHECK(canonical_form(candidates[i]) == candidates[i]);
    CHECK(check_hattori(candidates[i]).passed());
    if (i > 0) CHECK(serialize_fixed_point_data(candidates[i - 1]) != serialize_fixed_point_data(candidates[i]));
  }
  const auto target = ex::s2xs6(1, 1, 1);
  CHECK(std::ranges::find(candidates, target) != candidates.end());
  CHECK_THROWS_AS(enumerate_candidates(0), PreconditionViolation);
}

TEST_CASE("the profile-(1,1,0,1,1) specimen dies at reciprocal sums") {
  const FixedPointData specimen(4, {{"p0", {1, 2, 2, 2}}, {"p1", {-1, 2, 2, 2}}, {"p3", {1, -2, -2, -2}},
                                    {"p4", {-1, -2, -2, -2}}});
  CHECK(first_failing_filter(specimen) == "reciprocal_sums");
  CHECK(first_failing_filter(ex::s2xs6(1, 1, 1)).empty());
}

TEST_CASE("counts are consistent and every filter is listed") {
  for (Weight w = 1; w <= 3; ++w) {
    const auto& r = report_at(w);
    CHECK(r.weight_bound == w);
    CHECK(r.candidates_enumerated == r.survivors.size() + r.eliminated_total());
    CHECK(r.eliminated_by.size() == search_filter_order().size());
  }
}

TEST_CASE("assertions hold at W = 2 and W = 3") {
  for (Weight w = 2; w <= 3; ++w) {
    const auto& r = report_at(w);
    CHECK(find_breaches(r).empty());
    for (const auto& s : r.survivors) {
      CHECK(s.genus == GenusPolynomial{{0, -1, 2, -1, 0}});
      CHECK(s.chern == ChernNumbersDim8{Rational(0), Rational(0), Rational(0), Rational(4), Rational(4)});
    }
  }
}

TEST_CASE("realizable S^2 x S^6 data survive") {
  const auto& r = report_at(3);
  std::set<std::vector<std::vector<Weight>>> survivors;
  for (const auto& s : r.survivors) survivors.insert(oracle::shape(s.data));
  for (Weight a = 1; a <= 3; ++a)
    for (Weight b = 1; b <= 2; ++b)
      for (Weight c = 1; b + c <= 3; ++c) CHECK(survivors.contains(oracle::shape(ex::s2xs6(a, b, c))));
}

TEST_CASE("survivors are monotone in W") {
  std::set<std::vector<std::vector<Weight>>> at3;
  for (const auto& s : report_at(3).survivors) at3.insert(oracle::shape(s.data));
  for (const auto& s : report_at(2).survivors) CHECK(at3.contains(oracle::shape(s.data)));
}

TEST_CASE("reports are deterministic across job counts") {
  const auto one = run_search({2, 1, {}});
  const auto four = run_search({2, 4, {}});
  CHECK(to_json(one, {}).dump() == to_json(four, {}).dump());
}

TEST_CASE("find_breaches flags a forbidden survivor") {
  SearchReport fake;
  fake.weight_bound = 1;
  const FixedPointData d(4, {{"a", {1, 1, 1, 1}}, {"b", {-1, 1, 1, 1}}, {"c", {-1, -1, -1, 1}},
                             {"d", {-1, -1, -1, -1}}});
  fake.survivors.push_back({d, genus_via_counts(d), chern_numbers_dim8(d), weights_agree_up_to_sign(d)});
  const auto breaches = find_breaches(fake);
  REQUIRE(breaches.size() == 1);
  CHECK(breaches[0].reason.find("1 - y - y^3 + y^4") != std::string::npos);
  const auto j = to_json(fake, breaches);
  CHECK(j["assertions"]["no_survivor_with_genus_1_-1_0_-1_1"] == false);
}

TEST_CASE("progress callback receives lines") {
  std::vector<std::string> lines;
  SearchOptions options{1, 1, [&](std::string_view s) { lines.emplace_back(s); }};
  run_search(options);
  CHECK_FALSE(lines.empty());
  CHECK(lines.front().starts_with("enumerated 8"));
}
