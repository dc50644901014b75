#include "hsg/classifiers.hpp"

#include <random>

namespace hsg {

namespace {

using Slot = PatternSlot;

constexpr std::array<Slot, 3> kRegularPattern{Slot::Subject, Slot::Top,
                                              Slot::Subject};
constexpr std::array<Slot, 4> kIntraPattern{Slot::Top, Slot::Subject,
                                            Slot::Subject, Slot::Top};
constexpr std::array<Slot, 4> kLeftQuasiPattern{Slot::Top, Slot::Subject,
                                                Slot::Top, Slot::Subject};
constexpr std::array<Slot, 4> kRightQuasiPattern{Slot::Subject, Slot::Top,
                                                 Slot::Subject, Slot::Top};
constexpr std::array<Slot, 5> kSemisimplePattern{
    Slot::Top, Slot::Subject, Slot::Top, Slot::Subject, Slot::Top};

ElementSet product(const HyperOp& h, ElementSet lhs, ElementSet rhs) {
  ElementSet out;
  for (Element a : lhs) {
    for (Element b : rhs) out |= h.cell(a, b);
  }
  return out;
}

void require_hypersemigroup(const HyperOp& h) {
  if (!is_hypersemigroup(h)) throw NotHypersemigroupError{};
}

ElementSet subset_chain(const HyperOp& h, RegularityClass c,
                        ElementSet subject) {
  const ElementSet top = ElementSet::full(h.order());
  std::vector<ElementSet> factors;
  for (Slot s : fuzzy_pattern(c)) {
    factors.push_back(s == Slot::Subject ? subject : top);
  }
  return n_fold_product(h, factors);
}

RouteVerdict elementwise_unchecked(const HyperOp& h, RegularityClass c) {
  RouteVerdict verdict;
  for (Element a = 0; a < h.order(); ++a) {
    auto found = find_definitional_witness(h, c, a);
    if (!found) {
      verdict.holds = false;
      verdict.witnesses = {Witness{c, Route::Definitional, a, false, {}, {}}};
      return verdict;
    }
    verdict.witnesses.push_back(
        Witness{c, Route::Definitional, a, true, std::move(*found), {}});
  }
  verdict.holds = true;
  return verdict;
}

bool subset_unchecked(const HyperOp& h, RegularityClass c,
                      SubsetVariant variant) {
  if (variant == SubsetVariant::Singletons) {
    for (Element a = 0; a < h.order(); ++a) {
      if (!subset_chain(h, c, ElementSet::singleton(a)).contains(a)) {
        return false;
      }
    }
    return true;
  }
  const ElementSet::Mask last = ElementSet::full(h.order()).mask();
  for (ElementSet::Mask m = 1; m <= last; ++m) {
    const auto subject = ElementSet::from_mask(m);
    if (!subject.subset_of(subset_chain(h, c, subject))) return false;
  }
  return true;
}

RouteVerdict fuzzy_unchecked(const HyperOp& h, RegularityClass c) {
  RouteVerdict verdict;
  for (Element a = 0; a < h.order(); ++a) {
    if (!point_inequality_holds(h, c, a)) {
      verdict.holds = false;
      verdict.witnesses = {
          Witness{c, Route::Fuzzy, a, false, {}, point(h.carrier(), a)}};
      return verdict;
    }
    verdict.witnesses.push_back(Witness{c, Route::Fuzzy, a, true, {}, {}});
  }
  verdict.holds = true;
  return verdict;
}

ClassEntry classify_one(const HyperOp& h, RegularityClass c,
                        std::size_t subset_cap) {
  ClassEntry entry;
  entry.cls = c;
  auto elementwise = elementwise_unchecked(h, c);
  entry.elementwise = elementwise.holds;
  entry.elementwise_witnesses = std::move(elementwise.witnesses);
  entry.subset_singletons = subset_unchecked(h, c, SubsetVariant::Singletons);
  if (h.order() <= subset_cap) {
    entry.subset_all = subset_unchecked(h, c, SubsetVariant::AllSubsets);
  }
  auto fuzzy = fuzzy_unchecked(h, c);
  entry.fuzzy = fuzzy.holds;
  entry.fuzzy_witnesses = std::move(fuzzy.witnesses);
  entry.routes_agree = entry.elementwise == entry.subset_singletons &&
                       entry.elementwise == entry.fuzzy &&
                       entry.subset_all.value_or(entry.elementwise) ==
                           entry.elementwise;
  return entry;
}

}  // namespace

std::string_view class_name(RegularityClass c) noexcept {
  switch (c) {
    case RegularityClass::Regular:
      return "regular";
    case RegularityClass::IntraRegular:
      return "intra-regular";
    case RegularityClass::LeftQuasiRegular:
      return "left-quasi-regular";
    case RegularityClass::RightQuasiRegular:
      return "right-quasi-regular";
    case RegularityClass::Semisimple:
      return "semisimple";
  }
  return "?";
}

std::string_view route_name(Route r) noexcept {
  switch (r) {
    case Route::Definitional:
      return "definitional";
    case Route::Subset:
      return "subset";
    case Route::Fuzzy:
      return "fuzzy";
  }
  return "?";
}

std::span<const PatternSlot> fuzzy_pattern(RegularityClass c) noexcept {
  switch (c) {
    case RegularityClass::Regular:
      return kRegularPattern;
    case RegularityClass::IntraRegular:
      return kIntraPattern;
    case RegularityClass::LeftQuasiRegular:
      return kLeftQuasiPattern;
    case RegularityClass::RightQuasiRegular:
      return kRightQuasiPattern;
    case RegularityClass::Semisimple:
      return kSemisimplePattern;
  }
  return {};
}

std::size_t witness_arity(RegularityClass c) noexcept {
  switch (c) {
    case RegularityClass::Regular:
      return 1;
    case RegularityClass::Semisimple:
      return 3;
    default:
      return 2;
  }
}

bool definition_holds_with(const HyperOp& h, RegularityClass c, Element a,
                           std::span<const Element> elements) {
  const auto carrier = h.carrier();
  carrier.check(a);
  if (elements.size() != witness_arity(c)) {
    throw InputError("wrong number of witness elements for " +
                     std::string(class_name(c)));
  }
  for (Element e : elements) carrier.check(e);

  const ElementSet self = ElementSet::singleton(a);
  const Element x = elements[0];
  switch (c) {
    case RegularityClass::Regular:
      return product(h, h.cell(a, x), self).contains(a);
    case RegularityClass::IntraRegular:
      return product(h, h.cell(x, a), h.cell(a, elements[1])).contains(a);
    case RegularityClass::LeftQuasiRegular:
      return product(h, h.cell(x, a), h.cell(elements[1], a)).contains(a);
    case RegularityClass::RightQuasiRegular:
      return product(h, h.cell(a, x), h.cell(a, elements[1])).contains(a);
    case RegularityClass::Semisimple: {
      const ElementSet left = product(h, h.cell(x, a), h.cell(elements[1], a));
      return product(h, left, ElementSet::singleton(elements[2])).contains(a);
    }
  }
  return false;
}

std::optional<std::vector<Element>> find_definitional_witness(
    const HyperOp& h, RegularityClass c, Element a) {
  const std::size_t n = h.order();
  std::vector<Element> tuple(witness_arity(c), 0);
  // Odometer over n^k tuples, last position fastest (lexicographic order).
  while (true) {
    if (definition_holds_with(h, c, a, tuple)) return tuple;
    std::size_t pos = tuple.size();
    while (pos > 0 && ++tuple[pos - 1] == n) tuple[--pos] = 0;
    if (pos == 0) return std::nullopt;
  }
}

FuzzySubset evaluate_pattern(const HyperOp& h, RegularityClass c,
                             const FuzzySubset& f) {
  const FuzzySubset top = one(f.carrier());
  std::vector<FuzzySubset> factors;
  for (PatternSlot s : fuzzy_pattern(c)) {
    factors.push_back(s == PatternSlot::Subject ? f : top);
  }
  return compose_chain(h, factors);
}

bool point_inequality_holds(const HyperOp& h, RegularityClass c, Element a) {
  return evaluate_pattern(h, c, point(h.carrier(), a))[a] ==
         FuzzyValue::one();
}

bool reverify(const HyperOp& h, const Witness& w) {
  switch (w.route) {
    case Route::Definitional:
      if (w.positive) return definition_holds_with(h, w.cls, w.element, w.elements);
      return !find_definitional_witness(h, w.cls, w.element).has_value();
    case Route::Subset: {
      const bool member =
          subset_chain(h, w.cls, ElementSet::singleton(w.element))
              .contains(w.element);
      return member == w.positive;
    }
    case Route::Fuzzy:
      if (w.positive) return point_inequality_holds(h, w.cls, w.element);
      return w.failing_subset &&
             evaluate_pattern(h, w.cls, *w.failing_subset)[w.element] <
                 (*w.failing_subset)[w.element];
  }
  return false;
}

RouteVerdict is_class_elementwise(const HyperOp& h, RegularityClass c) {
  require_hypersemigroup(h);
  return elementwise_unchecked(h, c);
}

bool is_class_subsetdef(const HyperOp& h, RegularityClass c,
                        SubsetVariant variant, std::size_t subset_cap) {
  if (variant == SubsetVariant::AllSubsets && h.order() > subset_cap) {
    throw BudgetError("subset variant 2 refuses order " +
                      std::to_string(h.order()) + " above cap " +
                      std::to_string(subset_cap));
  }
  require_hypersemigroup(h);
  return subset_unchecked(h, c, variant);
}

RouteVerdict is_class_fuzzy(const HyperOp& h, RegularityClass c) {
  require_hypersemigroup(h);
  return fuzzy_unchecked(h, c);
}

bool fuzzy_inequality_holds(const HyperOp& h, RegularityClass c,
                            const FuzzySubset& f) {
  return leq(f, evaluate_pattern(h, c, f));
}

bool ClassificationReport::all_routes_agree() const noexcept {
  for (const auto& e : entries) {
    if (!e.routes_agree) return false;
  }
  return true;
}

unsigned ClassificationReport::class_mask() const noexcept {
  unsigned mask = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].holds()) mask |= 1U << i;
  }
  return mask;
}

ClassificationReport classify(const HyperOp& h, std::size_t subset_cap) {
  require_hypersemigroup(h);
  ClassificationReport report;
  report.order = h.order();
  for (RegularityClass c : kAllClasses) {
    report.entries[index_of(c)] = classify_one(h, c, subset_cap);
  }
  return report;
}

bool TheoremReport::passed() const noexcept {
  for (const auto& c : checks) {
    if (!c.passed()) return false;
  }
  return true;
}

TheoremReport verify_theorems(const HyperOp& h, std::size_t random_trials,
                              std::uint64_t seed) {
  const ClassificationReport classes = classify(h);
  TheoremReport report;
  report.order = h.order();
  report.trials = random_trials;
  report.seed = seed;

  std::mt19937_64 rng(seed);
  for (RegularityClass c : kAllClasses) {
    const ClassEntry& entry = classes[c];
    TheoremCheck& check = report.checks[index_of(c)];
    check.cls = c;
    check.verdict = entry.holds();
    check.routes_agree = entry.routes_agree;
    check.trials = random_trials;

    if (!entry.fuzzy) {
      const Witness& failure = entry.fuzzy_witnesses.front();
      check.point_set_consistent =
          failure.failing_subset &&
          !fuzzy_inequality_holds(h, c, *failure.failing_subset);
    }
    for (std::size_t t = 0; t < random_trials; ++t) {
      FuzzySubset f = random_fuzzy_subset(h.carrier(), rng);
      if (fuzzy_inequality_holds(h, c, f)) {
        ++check.satisfied;
      } else if (check.verdict && !check.counterexample) {
        check.counterexample = std::move(f);
      }
    }
  }
  return report;
}

}  // namespace hsg
