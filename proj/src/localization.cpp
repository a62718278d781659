#include "equilocal/localization.hpp"

#include <algorithm>
#include <functional>

#include "equilocal/errors.hpp"

namespace equilocal {

ChernPartition::ChernPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw PreconditionViolation("Chern partition needs at least one part");
  std::ranges::sort(parts_);
  if (parts_.front() < 1) throw PreconditionViolation("Chern partition parts must be positive");
  for (int part : parts_) degree_ += part;
}

std::string ChernPartition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size();) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    if (!out.empty()) out += "*";
    out += "c" + std::to_string(parts_[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::vector<ChernPartition> partitions_of(int degree, int max_part) {
  std::vector<ChernPartition> out;
  if (degree < 1 || max_part < 1) return out;
  std::vector<int> current;
  std::function<void(int, int)> extend = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = 1; part <= std::min(remaining, cap); ++part) {
      current.push_back(part);
      extend(remaining - part, part);
      current.pop_back();
    }
  };
  extend(degree, max_part);
  return out;
}

namespace {

std::vector<Integer> elementary_symmetric(const std::vector<Weight>& weights) {
  std::vector<Integer> e(weights.size() + 1, Integer(0));
  e[0] = 1;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    const Integer w = make_integer(weights[j]);
    for (std::size_t k = j + 1; k > 0; --k) e[k] += e[k - 1] * w;
  }
  return e;
}

}  // namespace

Rational localization_sum(const FixedPointData& d, const ChernPartition& lambda) {
  if (lambda.largest_part() > d.n())
    throw PreconditionViolation("partition " + lambda.to_string() + " has a part larger than n = " +
                                std::to_string(d.n()));
  Rational total(0);
  for (const auto& p : d.points()) {
    const auto e = elementary_symmetric(p.weights);
    Integer numerator(1);
    for (int part : lambda.parts()) numerator *= e[static_cast<std::size_t>(part)];
    // e[n] is the product of the weights: the equivariant Euler class at p.
    Rational term(numerator, e.back());
    term.canonicalize();
    total += term;
  }
  return total;
}

ChernNumbersDim8 chern_numbers_dim8(const FixedPointData& d) {
  if (d.n() != 4) throw PreconditionViolation("chern_numbers_dim8 requires n = 4");
  return {
      localization_sum(d, ChernPartition({1, 1, 1, 1})),
      localization_sum(d, ChernPartition({1, 1, 2})),
      localization_sum(d, ChernPartition({2, 2})),
      localization_sum(d, ChernPartition({1, 3})),
      localization_sum(d, ChernPartition({4})),
  };
}

std::array<Rational, 3> ty_genus_from_chern(const ChernNumbersDim8& c) {
  // T_i^4 from the chi_y power series x(1 + y e^{-x(1+y)}) / (1 - e^{-x(1+y)}).
  const Rational shared = -c.c1_4 + 4 * c.c1sq_c2 + 3 * c.c2_sq;
  Rational t0 = (shared + c.c1_c3 - c.c4) / 720;
  Rational t1 = (shared - 14 * c.c1_c3 - 31 * c.c4) / 180;
  Rational t2 = (shared - 19 * c.c1_c3 + 79 * c.c4) / 120;
  return {t0, t1, t2};
}

}  // namespace equilocal
