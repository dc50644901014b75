#include "hsg/ideals.hpp"

#include <algorithm>
#include <functional>

#include "hsg/classifiers.hpp"

namespace hsg {

namespace {

void check_same(const HyperOp& h, const FuzzySubset& f) {
  if (h.order() != f.order()) {
    throw InputError("carrier mismatch: order " + std::to_string(h.order()) +
                     " vs " + std::to_string(f.order()));
  }
}

// Pointwise maximum. Only the closures use it.
FuzzySubset join(const FuzzySubset& f, const FuzzySubset& g) {
  std::vector<FuzzyValue> out(f.order());
  for (Element x = 0; x < f.order(); ++x) out[x] = std::max(f[x], g[x]);
  return FuzzySubset(std::move(out));
}

FuzzySubset closure(const HyperOp& h, const FuzzySubset& f,
                    const std::function<FuzzySubset(const FuzzySubset&)>& step) {
  check_same(h, f);
  FuzzySubset current = f;
  while (true) {
    FuzzySubset next = join(current, step(current));
    if (next == current) return current;
    current = std::move(next);
  }
}

}  // namespace

bool is_fuzzy_right_ideal(const HyperOp& h, const FuzzySubset& f) {
  check_same(h, f);
  for (Element x = 0; x < h.order(); ++x) {
    for (Element y = 0; y < h.order(); ++y) {
      for (Element u : h.cell(x, y)) {
        if (f[u] < f[x]) return false;
      }
    }
  }
  return true;
}

bool is_fuzzy_left_ideal(const HyperOp& h, const FuzzySubset& f) {
  check_same(h, f);
  for (Element x = 0; x < h.order(); ++x) {
    for (Element y = 0; y < h.order(); ++y) {
      for (Element u : h.cell(x, y)) {
        if (f[u] < f[y]) return false;
      }
    }
  }
  return true;
}

FuzzySubset right_ideal_closure(const HyperOp& h, const FuzzySubset& f) {
  const FuzzySubset top = one(h.carrier());
  return closure(h, f, [&](const FuzzySubset& g) { return compose(h, g, top); });
}

FuzzySubset left_ideal_closure(const HyperOp& h, const FuzzySubset& f) {
  const FuzzySubset top = one(h.carrier());
  return closure(h, f, [&](const FuzzySubset& g) { return compose(h, top, g); });
}

bool check_meet_identity(const HyperOp& h, const FuzzySubset& f,
                         const FuzzySubset& g) {
  check_same(h, f);
  check_same(h, g);
  if (!is_class_elementwise(h, RegularityClass::Regular).holds) {
    throw NotRegularError{};
  }
  if (!is_fuzzy_right_ideal(h, f)) {
    throw NotIdealError("first argument is not a fuzzy right ideal");
  }
  if (!is_fuzzy_left_ideal(h, g)) {
    throw NotIdealError("second argument is not a fuzzy left ideal");
  }
  return meet(f, g) == compose(h, f, g);
}

}  // namespace hsg
