#include "equilocal/consistency.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

#include "equilocal/genus.hpp"
#include "equilocal/localization.hpp"
#include "equilocal/rational_function.hpp"

namespace equilocal {

const char* to_string(FilterStatus status) {
  switch (status) {
    case FilterStatus::pass: return "pass";
    case FilterStatus::fail: return "fail";
    case FilterStatus::not_applicable: return "not_applicable";
  }
  return "?";
}

namespace {

std::string format_weights(const std::vector<Weight>& weights) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < weights.size(); ++i) os << (i ? "," : "") << weights[i];
  os << "}";
  return os.str();
}

std::map<Weight, std::int64_t> tally(const FixedPointData& d) {
  std::map<Weight, std::int64_t> counts;
  for (const auto& p : d.points())
    for (Weight w : p.weights) ++counts[w];
  return counts;
}

Weight weight_sum(const FixedPointDatum& p) {
  Weight s = 0;
  for (Weight w : p.weights) s += w;
  return s;
}

Integer weight_product(const FixedPointDatum& p) {
  Integer prod(1);
  for (Weight w : p.weights) prod *= make_integer(w);
  return prod;
}

Integer binomial(std::uint64_t n, std::uint64_t k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

// Hattori pairing on an explicit list of weight multisets.
bool pairs_up(const std::vector<std::vector<Weight>>& lists) {
  std::map<Weight, std::int64_t> balance;  // #(+m) - #(-m), keyed by m = |w|
  for (const auto& list : lists)
    for (Weight w : list) balance[w < 0 ? -w : w] += (w > 0) ? 1 : -1;
  return std::ranges::all_of(balance, [](const auto& kv) { return kv.second == 0; });
}

}  // namespace

FilterReport check_hattori(const FixedPointData& d) {
  const auto counts = tally(d);
  std::set<Weight> magnitudes;
  for (const auto& [w, c] : counts) magnitudes.insert(w < 0 ? -w : w);
  for (Weight m : magnitudes) {
    const auto plus = counts.contains(m) ? counts.at(m) : 0;
    const auto minus = counts.contains(-m) ? counts.at(-m) : 0;
    if (plus != minus)
      return FilterReport::fail("hattori", "w=" + std::to_string(m) + ": " + std::to_string(plus) +
                                               " occurrences of " + std::to_string(m) + " but " +
                                               std::to_string(minus) + " of " + std::to_string(-m));
  }
  return FilterReport::pass("hattori");
}

FilterReport check_weight_sum_zero(const FixedPointData& d) {
  Integer total(0);
  for (const auto& p : d.points())
    for (Weight w : p.weights) total += make_integer(w);
  if (total != 0) return FilterReport::fail("weight_sum_zero", "total " + to_string(total));
  return FilterReport::pass("weight_sum_zero");
}

FilterReport check_count_symmetry(const FixedPointData& d) {
  const auto profile = negative_count_profile(d);
  const std::size_t n = profile.size() - 1;
  for (std::size_t i = 0; i <= n / 2; ++i) {
    if (profile[i] != profile[n - i])
      return FilterReport::fail("count_symmetry", "N_" + std::to_string(i) + "=" + std::to_string(profile[i]) +
                                                      " but N_" + std::to_string(n - i) + "=" +
                                                      std::to_string(profile[n - i]));
  }
  return FilterReport::pass("count_symmetry");
}

FilterReport check_small_weight_pairing(const FixedPointData& d) {
  if (d.size() == 0) throw EmptyData("check_small_weight_pairing needs at least one weight");
  std::vector<Weight> positives;
  for (const auto& p : d.points())
    for (Weight w : p.weights)
      if (w > 0) positives.push_back(w);
  if (positives.empty()) return FilterReport::not_applicable("small_weight_pairing", "no positive weight");
  std::ranges::sort(positives);

  // The second smallest may coincide with the smallest; then test it once.
  std::vector<Weight> tested{positives[0]};
  if (positives.size() > 1 && positives[1] != positives[0]) tested.push_back(positives[1]);

  const auto n = static_cast<std::size_t>(d.n());
  for (Weight a : tested) {
    std::vector<std::int64_t> up(n + 1, 0), down(n + 1, 0);
    for (const auto& p : d.points()) {
      const auto level = negative_weight_count(p);
      up[level] += static_cast<std::int64_t>(count_weight(p, a));
      down[level] += static_cast<std::int64_t>(count_weight(p, -a));
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (up[i] != down[i + 1])
        return FilterReport::fail("small_weight_pairing",
                                  "a=" + std::to_string(a) + ": " + std::to_string(up[i]) + " occurrences of " +
                                      std::to_string(a) + " at points with " + std::to_string(i) +
                                      " negative weights, " + std::to_string(down[i + 1]) + " of " +
                                      std::to_string(-a) + " at points with " + std::to_string(i + 1));
    }
  }
  return FilterReport::pass("small_weight_pairing");
}

FilterReport check_adjacent_counts(const FixedPointData& d) {
  if (d.size() == 0) return FilterReport::not_applicable("adjacent_counts", "no fixed points");
  const auto profile = negative_count_profile(d);
  for (std::size_t i = 0; i + 1 < profile.size(); ++i)
    if (profile[i] != 0 && profile[i + 1] != 0) return FilterReport::pass("adjacent_counts");
  std::ostringstream os;
  os << "N profile (";
  for (std::size_t i = 0; i < profile.size(); ++i) os << (i ? "," : "") << profile[i];
  os << ") has no adjacent nonzero pair";
  return FilterReport::fail("adjacent_counts", os.str());
}

FilterReport check_reciprocal_sums(const FixedPointData& d) {
  std::map<Weight, Rational> levels;
  for (const auto& p : d.points()) {
    Rational term(Integer(1), weight_product(p));
    term.canonicalize();
    levels[weight_sum(p)] += term;
  }
  if (levels.size() > static_cast<std::size_t>(d.n()))
    return FilterReport::not_applicable("reciprocal_sums", std::to_string(levels.size()) +
                                                               " distinct weight sums exceed n=" +
                                                               std::to_string(d.n()));
  for (const auto& [k, value] : levels) {
    if (value != 0)
      return FilterReport::fail("reciprocal_sums", "weight sum " + std::to_string(k) +
                                                       ": reciprocal products add to " + to_string(value));
  }
  return FilterReport::pass("reciprocal_sums");
}

FilterReport check_binomial_profile(const FixedPointData& d) {
  std::set<Weight> magnitudes;
  for (const auto& p : d.points())
    for (Weight w : p.weights) magnitudes.insert(w < 0 ? -w : w);
  if (magnitudes.size() != 1)
    return FilterReport::not_applicable("binomial_profile", "weights are not all +w or -w for one w");
  const auto profile = negative_count_profile(d);
  const auto n = static_cast<std::uint64_t>(d.n());
  for (std::uint64_t k = 0; k <= n; ++k) {
    const Integer expected = profile[0] * binomial(n, k);
    if (expected != profile[k])
      return FilterReport::fail("binomial_profile", "N_" + std::to_string(k) + "=" + std::to_string(profile[k]) +
                                                        " but N_0*binom(" + std::to_string(n) + "," +
                                                        std::to_string(k) + ")=" + to_string(expected));
  }
  return FilterReport::pass("binomial_profile");
}

Dichotomy classify_dichotomy(const FixedPointData& d) {
  if (d.n() < 4 || d.size() != 4)
    throw PreconditionViolation("classify_dichotomy needs n >= 4 and exactly 4 fixed points");
  std::array<Weight, 4> sums{};
  std::array<Integer, 4> products;
  for (std::size_t i = 0; i < 4; ++i) {
    sums[i] = weight_sum(d.points()[i]);
    products[i] = weight_product(d.points()[i]);
  }

  if (std::ranges::all_of(sums, [](Weight s) { return s == 0; })) {
    Rational reciprocal(0);
    for (const auto& prod : products) reciprocal += Rational(1) / prod;
    if (reciprocal == 0) return DichotomyCase1{};
  }

  static constexpr std::array<std::array<std::size_t, 4>, 3> kPairings{{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
  for (const auto& [a0, a1, b0, b1] : kPairings) {
    if (sums[a0] != sums[a1] || sums[b0] != sums[b1] || sums[a0] != -sums[b0]) continue;
    if (products[a0] != -products[a1] || products[b0] != -products[b1]) continue;
    const bool a_first = sums[a0] >= 0;
    DichotomyCase2 result;
    result.first = a_first ? std::array{a0, a1} : std::array{b0, b1};
    result.second = a_first ? std::array{b0, b1} : std::array{a0, a1};
    result.sum = sums[result.first[0]];
    result.first_products = {products[result.first[0]], products[result.first[1]]};
    result.second_products = {products[result.second[0]], products[result.second[1]]};
    return result;
  }

  std::ostringstream os;
  os << "weight sums (";
  for (std::size_t i = 0; i < 4; ++i) os << (i ? "," : "") << sums[i];
  os << "), products (";
  for (std::size_t i = 0; i < 4; ++i) os << (i ? "," : "") << products[i].get_str();
  os << ") fit neither case";
  return DichotomyFail{os.str()};
}

FilterReport check_dichotomy(const FixedPointData& d) {
  if (d.n() < 4 || d.size() != 4)
    return FilterReport::not_applicable("dichotomy", "needs n >= 4 and exactly 4 fixed points");
  const auto outcome = classify_dichotomy(d);
  if (const auto* failure = std::get_if<DichotomyFail>(&outcome))
    return FilterReport::fail("dichotomy", failure->reason);
  return FilterReport::pass("dichotomy");
}

// ---------------------------------------------------------------------------
// Isotropy restrictions.

namespace {

using SubWeights = std::vector<Weight>;  // sorted

bool same_multiset(const SubWeights& sorted, std::vector<Weight> expected) {
  std::ranges::sort(expected);
  return sorted == expected;
}

// Two points carrying {-a-b, a, b} and {-a, -b, a+b}.
bool is_two_point_six_dim(const SubWeights& x, const SubWeights& y) {
  auto ordered = [](const SubWeights& lone, const SubWeights& other) {
    return lone[0] < 0 && lone[1] > 0 && lone[2] > 0 && lone[0] == -(lone[1] + lone[2]) &&
           same_multiset(other, {-lone[1], -lone[2], lone[1] + lone[2]});
  };
  return ordered(x, y) || ordered(y, x);
}

// Three points carrying {a+b, a}, {-a, b}, {-b, -a-b}.
bool is_three_point_four_dim(const std::vector<SubWeights>& subs) {
  std::array<std::size_t, 3> order{0, 1, 2};
  do {
    const auto& top = subs[order[0]];
    if (top[0] <= 0) continue;
    const Weight a = top[0];
    const Weight b = top[1] - top[0];
    if (b <= 0) continue;
    if (same_multiset(subs[order[1]], {-a, b}) && same_multiset(subs[order[2]], {-b, -a - b})) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

// Four points carrying {a,b}, {-a,b}, {-b,c}, {-b,-c} with a = +-c mod b.
bool is_four_point_four_dim(const std::vector<SubWeights>& subs) {
  std::array<std::size_t, 4> order{0, 1, 2, 3};
  do {
    const auto& top = subs[order[0]];
    if (top[0] <= 0) continue;
    for (int swap = 0; swap < 2; ++swap) {
      const Weight a = swap ? top[1] : top[0];
      const Weight b = swap ? top[0] : top[1];
      if (!same_multiset(subs[order[1]], {-a, b})) continue;
      const auto& third = subs[order[2]];
      Weight c = 0;
      if (third[0] == -b && third[1] > 0) c = third[1];
      if (c == 0) continue;
      if (!same_multiset(subs[order[3]], {-b, -c})) continue;
      if ((a - c) % b == 0 || (a + c) % b == 0) return true;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

// Whether the given points could be exactly the fixed points of one connected
// component of M^{Z_w}, whose tangent weights are `subs`.
bool is_consistent_component(const std::vector<SubWeights>& subs) {
  const std::size_t points = subs.size();
  const std::size_t m = subs.front().size();
  if (std::ranges::any_of(subs, [m](const SubWeights& s) { return s.size() != m; })) return false;
  if (!pairs_up(subs)) return false;

  // Classified small cases: one point is a point; two points are S^2 or the
  // six-dimensional pattern; three points are the CP^2 pattern; four points
  // in dimension 2 do not occur on a connected surface, in dimension 4 they
  // follow the Hirzebruch-surface pattern.
  if (points == 1) return false;
  if (m == 1 && points != 2) return false;
  if (points == 2 && m != 1 && !(m == 3 && is_two_point_six_dim(subs[0], subs[1]))) return false;
  if (points == 3 && !(m == 2 && is_three_point_four_dim(subs))) return false;
  if (points == 4 && m == 2 && !is_four_point_four_dim(subs)) return false;

  // All tangent weights +-v for a single v: binomial profile.
  std::set<Weight> magnitudes;
  for (const auto& s : subs)
    for (Weight w : s) magnitudes.insert(w < 0 ? -w : w);
  if (magnitudes.size() == 1) {
    std::vector<std::int64_t> profile(m + 1, 0);
    for (const auto& s : subs)
      ++profile[static_cast<std::size_t>(std::ranges::count_if(s, [](Weight w) { return w < 0; }))];
    for (std::size_t k = 0; k <= m; ++k)
      if (profile[0] * binomial(m, k) != profile[k]) return false;
  }
  return true;
}

constexpr std::size_t kMaxComponentSearchPoints = 20;

// Whether the points (all with the same sub-multiset size) can be split into
// consistent components. Bitmask backtracking with memoized dead ends.
bool splits_into_components(const std::vector<SubWeights>& subs) {
  const std::size_t count = subs.size();
  const std::uint32_t full = (1u << count) - 1;
  std::unordered_set<std::uint32_t> dead;

  auto search = [&](auto&& self, std::uint32_t used) -> bool {
    if (used == full) return true;
    if (dead.contains(used)) return false;
    const auto first = static_cast<std::size_t>(std::countr_one(used));
    const std::uint32_t free_rest = full & ~used & ~(1u << first);
    // Enumerate subsets of the remaining points to join `first`.
    for (std::uint32_t extra = free_rest;; extra = (extra - 1) & free_rest) {
      std::vector<SubWeights> group{subs[first]};
      for (std::size_t i = 0; i < count; ++i)
        if (extra & (1u << i)) group.push_back(subs[i]);
      if (is_consistent_component(group) && self(self, used | (1u << first) | extra)) return true;
      if (extra == 0) break;
    }
    dead.insert(used);
    return false;
  };
  return search(search, 0);
}

std::set<Weight> divisors_at_least_two(const FixedPointData& d) {
  std::set<Weight> magnitudes;
  for (const auto& p : d.points())
    for (Weight w : p.weights) magnitudes.insert(w < 0 ? -w : w);
  std::set<Weight> out;
  for (Weight m : magnitudes) {
    for (Weight k = 1; k * k <= m; ++k) {
      if (m % k != 0) continue;
      if (k >= 2) out.insert(k);
      if (m / k >= 2) out.insert(m / k);
    }
  }
  return out;
}

}  // namespace

FilterReport check_isotropy_restrictions(const FixedPointData& d) {
  for (Weight w : divisors_at_least_two(d)) {
    std::map<std::size_t, std::vector<SubWeights>> by_dimension;
    std::map<std::size_t, std::vector<std::string>> labels;
    for (const auto& p : d.points()) {
      SubWeights sub;
      for (Weight x : p.weights)
        if (x % w == 0) sub.push_back(x);
      if (sub.empty()) continue;
      std::ranges::sort(sub);
      labels[sub.size()].push_back(p.label + format_weights(sub));
      by_dimension[sub.size()].push_back(std::move(sub));
    }
    for (const auto& [m, subs] : by_dimension) {
      // Components are connected, so they have a single dimension; each
      // dimension class splits on its own.
      if (subs.size() > kMaxComponentSearchPoints) continue;
      if (!splits_into_components(subs)) {
        std::string witness = "Z_" + std::to_string(w) + " tangent weights";
        for (const auto& l : labels[m]) witness += " " + l;
        witness += " admit no consistent split into fixed components of complex dimension " + std::to_string(m);
        return FilterReport::fail("isotropy", witness);
      }
    }
  }
  return FilterReport::pass("isotropy");
}

// ---------------------------------------------------------------------------

namespace {
constexpr int kMaxPartitionN = 24;
}

FilterReport check_localization_vanishing(const FixedPointData& d) {
  if (d.n() > kMaxPartitionN)
    return FilterReport::not_applicable("localization_vanishing", "n too large for exhaustive Chern monomials");
  for (int degree = 1; degree < d.n(); ++degree) {
    for (const auto& lambda : partitions_of(degree, d.n())) {
      const Rational value = localization_sum(d, lambda);
      if (value != 0)
        return FilterReport::fail("localization_vanishing", "degree " + std::to_string(degree) + " monomial " +
                                                                lambda.to_string() + " localizes to " +
                                                                to_string(value));
    }
  }
  return FilterReport::pass("localization_vanishing");
}

FilterReport check_chern_integrality(const FixedPointData& d) {
  if (d.n() > kMaxPartitionN)
    return FilterReport::not_applicable("chern_integrality", "n too large for exhaustive Chern monomials");
  for (const auto& lambda : partitions_of(d.n(), d.n())) {
    const Rational value = localization_sum(d, lambda);
    if (!is_integer(value))
      return FilterReport::fail("chern_integrality", lambda.to_string() + " localizes to " + to_string(value));
  }
  return FilterReport::pass("chern_integrality");
}

FilterReport check_index_formula(const FixedPointData& d) {
  const auto result = genus_via_index_formula(d);
  if (const auto* bad = std::get_if<NotConstant>(&result))
    return FilterReport::fail("index_formula", "chi^" + std::to_string(bad->index) + " sum reduces to " +
                                                   bad->value.to_string() + ", not a constant");
  const auto& from_sums = std::get<GenusPolynomial>(result);
  const auto from_counts = genus_via_counts(d);
  for (std::size_t i = 0; i < from_counts.coefficients.size(); ++i) {
    if (from_sums.coefficients[i] != from_counts.coefficients[i])
      return FilterReport::fail("index_formula", "chi^" + std::to_string(i) + " sum is " +
                                                     std::to_string(from_sums.coefficients[i]) + " but (-1)^i N_i is " +
                                                     std::to_string(from_counts.coefficients[i]));
  }
  return FilterReport::pass("index_formula");
}

bool weights_agree_up_to_sign(const FixedPointData& d) {
  std::vector<Weight> reference;
  for (std::size_t i = 0; i < d.size(); ++i) {
    std::vector<Weight> magnitudes;
    for (Weight w : d.points()[i].weights) magnitudes.push_back(w < 0 ? -w : w);
    std::ranges::sort(magnitudes);
    if (i == 0) {
      reference = std::move(magnitudes);
    } else if (magnitudes != reference) {
      return false;
    }
  }
  return true;
}

std::vector<FilterReport> run_all_filters(const FixedPointData& d) {
  std::vector<FilterReport> reports;
  reports.push_back(check_hattori(d));
  reports.push_back(check_weight_sum_zero(d));
  reports.push_back(check_count_symmetry(d));
  reports.push_back(check_adjacent_counts(d));
  if (d.size() == 0) {
    reports.push_back(FilterReport::not_applicable("small_weight_pairing", "no weights"));
  } else {
    reports.push_back(check_small_weight_pairing(d));
  }
  reports.push_back(check_reciprocal_sums(d));
  reports.push_back(check_binomial_profile(d));
  reports.push_back(check_dichotomy(d));
  reports.push_back(check_isotropy_restrictions(d));
  reports.push_back(check_localization_vanishing(d));
  reports.push_back(check_chern_integrality(d));
  reports.push_back(check_index_formula(d));
  return reports;
}

}  // namespace equilocal
