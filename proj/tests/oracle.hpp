#pragma once

// Reference computations used to check the library. Each takes a different
// route from the production code: subset sums instead of product expansion,
// Newton's identities instead of elementary symmetric expansion, and point
// evaluation instead of symbolic reduction.

#include <algorithm>
#include <bit>
#include <set>
#include <vector>

#include "equilocal/fixed_point_data.hpp"
#include "equilocal/rational.hpp"

namespace oracle {

using equilocal::FixedPointData;
using equilocal::Rational;
using equilocal::Weight;

inline Rational power(const Rational& base, Weight exponent) {
  Rational result(1);
  const Weight e = exponent < 0 ? -exponent : exponent;
  for (Weight k = 0; k < e; ++k) result *= base;
  if (exponent < 0) result = Rational(1) / result;
  return result;
}

// Sum over all i-element subsets of the products of their members.
inline Rational elementary_by_subsets(const std::vector<Rational>& xs, int i) {
  Rational total(0);
  const std::size_t n = xs.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    if (std::popcount(mask) != i) continue;
    Rational prod(1);
    for (std::size_t j = 0; j < n; ++j)
      if (mask & (std::size_t{1} << j)) prod *= xs[j];
    total += prod;
  }
  return total;
}

// Value at g = t of sum_p sigma_i(t^w) / prod_j (1 - t^w). Requires t not a
// root of unity.
inline Rational index_sum_at(const FixedPointData& d, int i, const Rational& t) {
  Rational total(0);
  for (const auto& p : d.points()) {
    std::vector<Rational> xs;
    Rational denominator(1);
    for (Weight w : p.weights) {
      xs.push_back(power(t, w));
      denominator *= Rational(1) - xs.back();
    }
    total += elementary_by_subsets(xs, i) / denominator;
  }
  return total;
}

// Elementary symmetric values e_0..e_n from power sums via Newton's
// identities: k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} p_i.
inline std::vector<Rational> elementary_by_newton(const std::vector<Weight>& weights) {
  const std::size_t n = weights.size();
  std::vector<Rational> p(n + 1, Rational(0));
  for (std::size_t k = 1; k <= n; ++k)
    for (Weight w : weights) p[k] += power(Rational(w), static_cast<Weight>(k));
  std::vector<Rational> e(n + 1, Rational(0));
  e[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc(0);
    for (std::size_t i = 1; i <= k; ++i) acc += (i % 2 == 1 ? 1 : -1) * e[k - i] * p[i];
    e[k] = acc / static_cast<long>(k);
  }
  return e;
}

// sum_p prod_{parts} e_part(w_p) / prod_j w_p,j.
inline Rational chern_number(const FixedPointData& d, const std::vector<int>& parts) {
  Rational total(0);
  for (const auto& p : d.points()) {
    const auto e = elementary_by_newton(p.weights);
    Rational term(1);
    for (int part : parts) term *= e[static_cast<std::size_t>(part)];
    Rational euler(1);
    for (Weight w : p.weights) euler *= w;
    total += term / euler;
  }
  return total;
}

// chi^i = (-1)^i N_i, tallied directly.
inline std::vector<std::int64_t> genus_by_tally(const FixedPointData& d) {
  std::vector<std::int64_t> out(static_cast<std::size_t>(d.n()) + 1, 0);
  for (const auto& p : d.points()) {
    const auto neg = std::ranges::count_if(p.weights, [](Weight w) { return w < 0; });
    out[static_cast<std::size_t>(neg)] += (neg % 2 == 0) ? 1 : -1;
  }
  return out;
}

// Sorted weight lists per point, points sorted: a relabeling-free key.
inline std::vector<std::vector<Weight>> shape(const FixedPointData& d) {
  std::vector<std::vector<Weight>> rows;
  for (const auto& p : d.points()) {
    auto w = p.weights;
    std::ranges::sort(w);
    rows.push_back(std::move(w));
  }
  std::ranges::sort(rows);
  return rows;
}

// Every multiset of 8 directed edges (i != j, label 1..W) on 4 vertices with
// each vertex meeting exactly 4 edge ends, reduced to shape(). Brute force
// over the edge multiset, independent of the library's structure enumeration.
inline std::set<std::vector<std::vector<Weight>>> brute_force_shapes(Weight max_weight) {
  struct Option {
    int from, to;
    Weight w;
  };
  std::vector<Option> options;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j)
        for (Weight w = 1; w <= max_weight; ++w) options.push_back({i, j, w});
  std::set<std::vector<std::vector<Weight>>> shapes;
  std::vector<std::vector<Weight>> at(4);
  auto rec = [&](auto&& self, std::size_t start, int left) -> void {
    if (left == 0) {
      auto rows = at;
      for (auto& r : rows) std::ranges::sort(r);
      std::ranges::sort(rows);
      shapes.insert(rows);
      return;
    }
    for (std::size_t k = start; k < options.size(); ++k) {
      const auto& o = options[k];
      if (at[static_cast<std::size_t>(o.from)].size() >= 4 || at[static_cast<std::size_t>(o.to)].size() >= 4)
        continue;
      at[static_cast<std::size_t>(o.from)].push_back(o.w);
      at[static_cast<std::size_t>(o.to)].push_back(-o.w);
      self(self, k, left - 1);
      at[static_cast<std::size_t>(o.from)].pop_back();
      at[static_cast<std::size_t>(o.to)].pop_back();
    }
  };
  rec(rec, 0, 8);
  return shapes;
}

}  // namespace oracle
