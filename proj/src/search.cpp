#include "equilocal/search.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "equilocal/errors.hpp"
#include "equilocal/genus.hpp"
#include "equilocal/json_io.hpp"
#include "equilocal/multigraph.hpp"

namespace equilocal {

namespace {

using Key = std::vector<std::int32_t>;

struct KeyHash {
  std::size_t operator()(const Key& key) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : key) h = (h ^ static_cast<std::uint32_t>(v)) * 1099511628211ull;
    return h;
  }
};

// Loop-free undirected edge multiplicities x[i][j] (i < j) with every vertex
// of degree n, one representative per relabeling orbit.
class StructureEnumerator {
 public:
  StructureEnumerator(int points, int n) : points_(points), n_(n) {
    for (int i = 0; i < points; ++i)
      for (int j = i + 1; j < points; ++j) pairs_.emplace_back(i, j);
  }

  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

  std::vector<std::vector<int>> representatives() {
    std::vector<std::vector<int>> out;
    std::vector<int> x(pairs_.size(), 0);
    std::vector<int> remaining(static_cast<std::size_t>(points_), n_);
    fill(0, x, remaining, out);
    return out;
  }

 private:
  void fill(std::size_t index, std::vector<int>& x, std::vector<int>& remaining,
            std::vector<std::vector<int>>& out) {
    if (index == pairs_.size()) {
      if (std::ranges::all_of(remaining, [](int r) { return r == 0; }) && is_representative(x)) out.push_back(x);
      return;
    }
    const auto [i, j] = pairs_[index];
    const int cap = std::min(remaining[static_cast<std::size_t>(i)], remaining[static_cast<std::size_t>(j)]);
    // Vertex i gets no more edges after its last pair (i, points-1).
    const bool closes_i = (j == points_ - 1);
    for (int m = 0; m <= cap; ++m) {
      if (closes_i && remaining[static_cast<std::size_t>(i)] - m != 0) continue;
      x[index] = m;
      remaining[static_cast<std::size_t>(i)] -= m;
      remaining[static_cast<std::size_t>(j)] -= m;
      fill(index + 1, x, remaining, out);
      remaining[static_cast<std::size_t>(i)] += m;
      remaining[static_cast<std::size_t>(j)] += m;
    }
    x[index] = 0;
  }

  bool is_representative(const std::vector<int>& x) const {
    std::vector<int> perm(static_cast<std::size_t>(points_));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> image(x.size());
    while (std::next_permutation(perm.begin(), perm.end())) {
      for (std::size_t p = 0; p < pairs_.size(); ++p) {
        int a = perm[static_cast<std::size_t>(pairs_[p].first)];
        int b = perm[static_cast<std::size_t>(pairs_[p].second)];
        if (a > b) std::swap(a, b);
        image[pair_index(a, b)] = x[p];
      }
      if (image < x) return false;
    }
    return true;
  }

  std::size_t pair_index(int a, int b) const {
    // Row-major position of (a, b), a < b, in the upper triangle.
    return static_cast<std::size_t>(a * (2 * points_ - a - 1) / 2 + (b - a - 1));
  }

  int points_;
  int n_;
  std::vector<std::pair<int, int>> pairs_;
};

// Orients and labels every edge of one structure, collecting canonical keys.
class LabelExpander {
 public:
  LabelExpander(const std::vector<std::pair<int, int>>& pairs, int points, int n, Weight max_weight,
                std::unordered_set<Key, KeyHash>& keys)
      : pairs_(pairs), n_(n), max_weight_(max_weight), keys_(keys),
        weights_(static_cast<std::size_t>(points)) {}

  void expand(const std::vector<int>& multiplicities) {
    multiplicities_ = &multiplicities;
    for (auto& w : weights_) w.clear();
    next_pair(0);
  }

 private:
  // An option encodes (direction, label): options [0, W) run i->j with label
  // o+1, options [W, 2W) run j->i with label o-W+1.
  void next_pair(std::size_t index) {
    if (index == pairs_.size()) {
      record();
      return;
    }
    choose(index, (*multiplicities_)[index], 0);
  }

  void choose(std::size_t index, int left, Weight min_option) {
    if (left == 0) {
      next_pair(index + 1);
      return;
    }
    const auto [i, j] = pairs_[index];
    auto& wi = weights_[static_cast<std::size_t>(i)];
    auto& wj = weights_[static_cast<std::size_t>(j)];
    for (Weight option = min_option; option < 2 * max_weight_; ++option) {
      const bool forward = option < max_weight_;
      const Weight label = forward ? option + 1 : option - max_weight_ + 1;
      wi.push_back(forward ? label : -label);
      wj.push_back(forward ? -label : label);
      choose(index, left - 1, option);
      wi.pop_back();
      wj.pop_back();
    }
  }

  void record() {
    std::vector<std::vector<std::int32_t>> rows;
    rows.reserve(weights_.size());
    for (const auto& w : weights_) {
      std::vector<std::int32_t> row(w.begin(), w.end());
      std::ranges::sort(row);
      rows.push_back(std::move(row));
    }
    std::ranges::sort(rows);
    Key key;
    key.reserve(weights_.size() * static_cast<std::size_t>(n_));
    for (const auto& row : rows) key.insert(key.end(), row.begin(), row.end());
    keys_.insert(std::move(key));
  }

  const std::vector<std::pair<int, int>>& pairs_;
  int n_;
  Weight max_weight_;
  std::unordered_set<Key, KeyHash>& keys_;
  std::vector<std::vector<Weight>> weights_;
  const std::vector<int>* multiplicities_ = nullptr;
};

FixedPointData from_key(const Key& key, int points, int n) {
  std::vector<FixedPointDatum> data;
  for (int p = 0; p < points; ++p) {
    const auto begin = key.begin() + static_cast<std::ptrdiff_t>(p) * n;
    data.push_back({"p" + std::to_string(p + 1), std::vector<Weight>(begin, begin + n)});
  }
  return FixedPointData(n, std::move(data));
}

}  // namespace

std::vector<FixedPointData> enumerate_candidates(Weight max_weight, int points, int n) {
  if (max_weight < 1 || points < 1 || n < 1)
    throw PreconditionViolation("enumerate_candidates needs positive bounds");
  if (max_weight > 1000) throw PreconditionViolation("max_weight too large for exhaustive enumeration");
  StructureEnumerator structures(points, n);
  std::unordered_set<Key, KeyHash> keys;
  LabelExpander expander(structures.pairs(), points, n, max_weight, keys);
  for (const auto& x : structures.representatives()) expander.expand(x);

  std::vector<Key> sorted(keys.begin(), keys.end());
  std::ranges::sort(sorted);
  std::vector<FixedPointData> out;
  out.reserve(sorted.size());
  for (const auto& key : sorted) out.push_back(from_key(key, points, n));
  return out;
}

const std::vector<std::string>& search_filter_order() {
  static const std::vector<std::string> order{
      "hattori",           "weight_sum_zero", "count_symmetry",        "adjacent_counts",
      "small_weight_pairing", "reciprocal_sums", "dichotomy",          "binomial_profile",
      "describing_multigraph", "isotropy",     "localization_vanishing", "chern_integrality",
      "index_formula",
  };
  return order;
}

std::string first_failing_filter(const FixedPointData& d) {
  using Check = FilterReport (*)(const FixedPointData&);
  // Cheap counting filters first; rational-function reduction last.
  static constexpr Check kChecks[] = {
      check_hattori,           check_weight_sum_zero,  check_count_symmetry,       check_adjacent_counts,
      check_small_weight_pairing, check_reciprocal_sums, check_dichotomy,          check_binomial_profile,
      check_describing_multigraph, check_isotropy_restrictions, check_localization_vanishing,
      check_chern_integrality, check_index_formula,
  };
  for (Check check : kChecks) {
    const FilterReport report = check(d);
    if (report.failed()) return report.name;
  }
  return {};
}

std::uint64_t SearchReport::eliminated_total() const {
  std::uint64_t total = 0;
  for (const auto& [name, count] : eliminated_by) total += count;
  return total;
}

SearchReport run_search(const SearchOptions& options) {
  if (options.max_weight < 1) throw PreconditionViolation("max_weight must be positive");
  auto say = [&](const std::string& line) {
    if (options.progress) options.progress(line);
  };

  const auto candidates = enumerate_candidates(options.max_weight);
  say("enumerated " + std::to_string(candidates.size()) + " canonical candidates with labels <= " +
      std::to_string(options.max_weight));

  // outcome[i]: index into search_filter_order() of the eliminating filter,
  // or -1 for a survivor. Workers write disjoint slots; merging in index
  // order keeps the report independent of scheduling.
  std::vector<int> outcome(candidates.size(), -1);
  const auto& order = search_filter_order();
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> done{0};
  std::mutex progress_mutex;
  const std::size_t step = std::max<std::size_t>(1, candidates.size() / 10);

  auto worker = [&] {
    for (std::size_t i = next++; i < candidates.size(); i = next++) {
      const std::string failed = first_failing_filter(candidates[i]);
      if (!failed.empty())
        outcome[i] = static_cast<int>(std::ranges::find(order, failed) - order.begin());
      const std::size_t finished = ++done;
      if (finished % step == 0 && options.progress) {
        std::lock_guard lock(progress_mutex);
        say("filtered " + std::to_string(finished) + "/" + std::to_string(candidates.size()));
      }
    }
  };
  const unsigned jobs = std::max(1u, options.jobs);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SearchReport report;
  report.weight_bound = options.max_weight;
  report.candidates_enumerated = candidates.size();
  for (const auto& name : order) report.eliminated_by[name] = 0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (outcome[i] >= 0) {
      ++report.eliminated_by[order[static_cast<std::size_t>(outcome[i])]];
      continue;
    }
    const auto& d = candidates[i];
    report.survivors.push_back({d, genus_via_counts(d), chern_numbers_dim8(d), weights_agree_up_to_sign(d)});
  }
  say(std::to_string(report.survivors.size()) + " survivors");
  return report;
}

std::vector<Breach> find_breaches(const SearchReport& report) {
  const GenusPolynomial excluded{{1, -1, 0, -1, 1}};
  const GenusPolynomial expected{{0, -1, 2, -1, 0}};
  const ChernNumbersDim8 expected_chern{Rational(0), Rational(0), Rational(0), Rational(4), Rational(4)};
  std::vector<Breach> out;
  for (const auto& s : report.survivors) {
    if (s.genus == excluded) {
      out.push_back({s.data, "survivor has chi_y = 1 - y - y^3 + y^4"});
    } else if (s.genus != expected) {
      out.push_back({s.data, "survivor genus differs from -y + 2y^2 - y^3"});
    } else if (!(s.chern == expected_chern)) {
      out.push_back({s.data, "survivor Chern numbers differ from (0, 0, 0, 4, 4)"});
    }
  }
  return out;
}

AssertionBreach::AssertionBreach(SearchReport report, std::vector<Breach> breaches)
    : std::runtime_error(breaches.empty() ? "assertion breach"
                                          : "assertion breach: " + breaches.front().reason),
      report_(std::move(report)),
      breaches_(std::move(breaches)) {}

SearchReport case_elimination_report(const SearchOptions& options) {
  SearchReport report = run_search(options);
  auto breaches = find_breaches(report);
  if (!breaches.empty()) throw AssertionBreach(std::move(report), std::move(breaches));
  return report;
}

Json to_json(const ChernNumbersDim8& c) {
  return {{"c1^4", to_string(c.c1_4)},
          {"c1^2*c2", to_string(c.c1sq_c2)},
          {"c2^2", to_string(c.c2_sq)},
          {"c1*c3", to_string(c.c1_c3)},
          {"c4", to_string(c.c4)}};
}

Json to_json(const SearchReport& report, const std::vector<Breach>& breaches) {
  Json survivors = Json::array();
  std::uint64_t agree = 0;
  for (const auto& s : report.survivors) {
    survivors.push_back({{"data", to_json(canonical_form(s.data))},
                         {"genus", s.genus.coefficients},
                         {"chern", to_json(s.chern)},
                         {"weights_agree_up_to_sign", s.weights_agree_up_to_sign}});
    if (s.weights_agree_up_to_sign) ++agree;
  }
  Json breach_list = Json::array();
  bool excluded_genus_seen = false;
  for (const auto& b : breaches) {
    breach_list.push_back({{"data", to_json(canonical_form(b.data))}, {"reason", b.reason}});
    if (genus_via_counts(b.data) == GenusPolynomial{{1, -1, 0, -1, 1}}) excluded_genus_seen = true;
  }
  Json eliminated = Json::object();
  for (const auto& [name, count] : report.eliminated_by) eliminated[name] = count;
  return {
      {"weight_bound", report.weight_bound},
      {"candidates_enumerated", report.candidates_enumerated},
      {"eliminated_by", std::move(eliminated)},
      {"eliminated_total", report.eliminated_total()},
      {"survivors", std::move(survivors)},
      {"assertions",
       {{"no_survivor_with_genus_1_-1_0_-1_1", !excluded_genus_seen},
        {"survivors_match_s2xs6_genus_and_chern", breaches.empty()}}},
      {"breaches", std::move(breach_list)},
      {"up_to_sign_probe",
       {{"agree", agree}, {"disagree", report.survivors.size() - agree}}},
  };
}

}  // namespace equilocal
