#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hsg/element_set.hpp"
#include "hsg/fuzzy_value.hpp"
#include "hsg/hyperop.hpp"

namespace hsg {

// A fuzzy subset f : carrier -> [0,1] with exact values.
class FuzzySubset {
 public:
  // All-zero subset of the carrier.
  explicit FuzzySubset(Carrier carrier)
      : values_(carrier.order(), FuzzyValue::zero()) {}

  explicit FuzzySubset(std::vector<FuzzyValue> values);
  FuzzySubset(std::initializer_list<FuzzyValue> values)
      : FuzzySubset(std::vector<FuzzyValue>(values)) {}

  std::size_t order() const noexcept { return values_.size(); }
  Carrier carrier() const { return Carrier{order()}; }

  FuzzyValue operator[](Element x) const noexcept { return values_[x]; }
  FuzzyValue at(Element x) const;
  void set(Element x, FuzzyValue v);

  std::span<const FuzzyValue> values() const noexcept { return values_; }

  // Comma-separated values, e.g. "1/2,0,1".
  std::string to_string() const;

  friend bool operator==(const FuzzySubset&, const FuzzySubset&) = default;

 private:
  std::vector<FuzzyValue> values_;
};

// A_a: the pairs (y, z) with a in y o z, in lexicographic order.
using PairSet = std::vector<std::pair<Element, Element>>;

PairSet a_set(const HyperOp& h, Element a);

// Sup-min composition: (f o g)(a) = max over (y,z) in A_a of min(f(y), g(z)),
// and 0 where A_a is empty.
FuzzySubset compose(const HyperOp& h, const FuzzySubset& f,
                    const FuzzySubset& g);

// Left-associated fold of compose. Parenthesization-independent only when h
// is a hypersemigroup; otherwise the left fold is the convention.
FuzzySubset compose_chain(const HyperOp& h,
                          std::span<const FuzzySubset> factors);
FuzzySubset compose_chain(const HyperOp& h,
                          std::initializer_list<FuzzySubset> factors);

// Pointwise order f <= g.
bool leq(const FuzzySubset& f, const FuzzySubset& g);

// Pointwise minimum (lattice meet).
FuzzySubset meet(const FuzzySubset& f, const FuzzySubset& g);

// The constant-1 fuzzy subset, the top of the order.
FuzzySubset one(Carrier c);

// Indicator of {a}.
FuzzySubset point(Carrier c, Element a);

// {x : f(x) > 0}
ElementSet support(const FuzzySubset& f);

// Each value is num/den with den uniform in [1, max_denominator] and num
// uniform in [0, den]; 0 and 1 come up often, which the property tests want.
FuzzySubset random_fuzzy_subset(Carrier c, std::mt19937_64& rng,
                                std::int64_t max_denominator = 16);

}  // namespace hsg
