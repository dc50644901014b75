#include "hsg/fuzzy.hpp"

#include <algorithm>

namespace hsg {

namespace {

void check_same(std::size_t lhs, std::size_t rhs) {
  if (lhs != rhs) {
    throw InputError("carrier mismatch: order " + std::to_string(lhs) +
                     " vs " + std::to_string(rhs));
  }
}

}  // namespace

FuzzySubset::FuzzySubset(std::vector<FuzzyValue> values)
    : values_(std::move(values)) {
  (void)Carrier{values_.size()};
}

FuzzyValue FuzzySubset::at(Element x) const {
  carrier().check(x);
  return values_[x];
}

void FuzzySubset::set(Element x, FuzzyValue v) {
  carrier().check(x);
  values_[x] = v;
}

std::string FuzzySubset::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i != 0) out += ',';
    out += values_[i].to_string();
  }
  return out;
}

PairSet a_set(const HyperOp& h, Element a) {
  h.carrier().check(a);
  PairSet pairs;
  for (Element y = 0; y < h.order(); ++y) {
    for (Element z = 0; z < h.order(); ++z) {
      if (h.cell(y, z).contains(a)) pairs.emplace_back(y, z);
    }
  }
  return pairs;
}

FuzzySubset compose(const HyperOp& h, const FuzzySubset& f,
                    const FuzzySubset& g) {
  check_same(h.order(), f.order());
  check_same(h.order(), g.order());
  // Scatter form of the sup over A_a: every pair (y,z) contributes to each a
  // in y o z. Starting from 0 covers the empty A_a case.
  std::vector<FuzzyValue> out(h.order(), FuzzyValue::zero());
  for (Element y = 0; y < h.order(); ++y) {
    for (Element z = 0; z < h.order(); ++z) {
      const FuzzyValue m = std::min(f[y], g[z]);
      if (m == FuzzyValue::zero()) continue;
      for (Element a : h.cell(y, z)) out[a] = std::max(out[a], m);
    }
  }
  return FuzzySubset(std::move(out));
}

FuzzySubset compose_chain(const HyperOp& h,
                          std::span<const FuzzySubset> factors) {
  if (factors.empty()) throw InputError("compose_chain needs a factor");
  check_same(h.order(), factors.front().order());
  FuzzySubset acc = factors.front();
  for (const FuzzySubset& next : factors.subspan(1)) {
    acc = compose(h, acc, next);
  }
  return acc;
}

FuzzySubset compose_chain(const HyperOp& h,
                          std::initializer_list<FuzzySubset> factors) {
  return compose_chain(
      h, std::span<const FuzzySubset>(factors.begin(), factors.size()));
}

bool leq(const FuzzySubset& f, const FuzzySubset& g) {
  check_same(f.order(), g.order());
  return std::ranges::equal(f.values(), g.values(), std::less_equal<>{});
}

FuzzySubset meet(const FuzzySubset& f, const FuzzySubset& g) {
  check_same(f.order(), g.order());
  std::vector<FuzzyValue> out(f.order());
  for (Element x = 0; x < f.order(); ++x) out[x] = std::min(f[x], g[x]);
  return FuzzySubset(std::move(out));
}

FuzzySubset one(Carrier c) {
  return FuzzySubset(std::vector<FuzzyValue>(c.order(), FuzzyValue::one()));
}

FuzzySubset point(Carrier c, Element a) {
  c.check(a);
  FuzzySubset f(c);
  f.set(a, FuzzyValue::one());
  return f;
}

ElementSet support(const FuzzySubset& f) {
  ElementSet s;
  for (Element x = 0; x < f.order(); ++x) {
    if (f[x] != FuzzyValue::zero()) s.insert(x);
  }
  return s;
}

FuzzySubset random_fuzzy_subset(Carrier c, std::mt19937_64& rng,
                                std::int64_t max_denominator) {
  if (max_denominator < 1) throw InputError("max_denominator must be >= 1");
  std::uniform_int_distribution<std::int64_t> pick_den(1, max_denominator);
  std::vector<FuzzyValue> values;
  values.reserve(c.order());
  for (std::size_t i = 0; i < c.order(); ++i) {
    const std::int64_t den = pick_den(rng);
    std::uniform_int_distribution<std::int64_t> pick_num(0, den);
    values.emplace_back(pick_num(rng), den);
  }
  return FuzzySubset(std::move(values));
}

}  // namespace hsg
