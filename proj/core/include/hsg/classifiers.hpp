#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hsg/element_set.hpp"
#include "hsg/fuzzy.hpp"
#include "hsg/hyperop.hpp"

namespace hsg {

// The five regularity classes of hypersemigroups. Each has an elementwise
// definition, two subset-product forms, and a fuzzy characterization
// f <= (pattern chain) for every fuzzy subset f:
//
//   class                 elementwise witness condition      fuzzy pattern
//   Regular               a in (a o x) * {a}                  f 1 f
//   IntraRegular          a in (x o a) * (a o y)              1 f f 1
//   LeftQuasiRegular      a in (x o a) * (y o a)              1 f 1 f
//   RightQuasiRegular     a in (a o x) * (a o y)              f 1 f 1
//   Semisimple            a in (x o a) * (y o a) * {z}        1 f 1 f 1
//
// The subset forms replace f by {a} (variant 1) or by an arbitrary nonempty
// A (variant 2, A <= chain) and 1 by the carrier.
enum class RegularityClass {
  Regular,
  IntraRegular,
  LeftQuasiRegular,
  RightQuasiRegular,
  Semisimple,
};

inline constexpr std::array<RegularityClass, 5> kAllClasses{
    RegularityClass::Regular, RegularityClass::IntraRegular,
    RegularityClass::LeftQuasiRegular, RegularityClass::RightQuasiRegular,
    RegularityClass::Semisimple};

inline constexpr std::size_t index_of(RegularityClass c) noexcept {
  return static_cast<std::size_t>(c);
}

// "regular", "intra-regular", "left-quasi-regular", ...
std::string_view class_name(RegularityClass c) noexcept;

enum class Route { Definitional, Subset, Fuzzy };

std::string_view route_name(Route r) noexcept;

// One slot of a fuzzy pattern: the subject f (or {a}, or A) or the top
// element 1 (or the carrier H).
enum class PatternSlot { Subject, Top };

std::span<const PatternSlot> fuzzy_pattern(RegularityClass c) noexcept;

// Number of witness elements the elementwise definition quantifies over.
std::size_t witness_arity(RegularityClass c) noexcept;

struct Witness {
  RegularityClass cls;
  Route route;
  Element element;
  bool positive;
  // Definitional positives: the x / (x,y) / (x,y,z) that place `element` in
  // the defining product.
  std::vector<Element> elements;
  // Fuzzy negatives: the point set whose inequality fails at `element`.
  std::optional<FuzzySubset> failing_subset;
};

// Re-evaluates a witness against the raw definition of its route.
bool reverify(const HyperOp& h, const Witness& w);

struct RouteVerdict {
  bool holds = false;
  // One positive witness per element on success; the first failing element
  // on failure.
  std::vector<Witness> witnesses;
};

// True iff `a` lies in the defining product built from `elements` (which
// must have witness_arity(c) entries). No associativity precondition:
// three-factor products fold left.
bool definition_holds_with(const HyperOp& h, RegularityClass c, Element a,
                           std::span<const Element> elements);

// Lexicographically first witness tuple for `a`, if any.
std::optional<std::vector<Element>> find_definitional_witness(
    const HyperOp& h, RegularityClass c, Element a);

// The class's pattern chain evaluated (left fold) at f.
FuzzySubset evaluate_pattern(const HyperOp& h, RegularityClass c,
                             const FuzzySubset& f);

// The point-set inequality f_a <= chain(f_a), i.e. chain(f_a)(a) == 1.
bool point_inequality_holds(const HyperOp& h, RegularityClass c, Element a);

// Route 1: exhaustive witness search per element. Requires a hypersemigroup.
RouteVerdict is_class_elementwise(const HyperOp& h, RegularityClass c);

enum class SubsetVariant { Singletons = 1, AllSubsets = 2 };

inline constexpr std::size_t kDefaultSubsetCap = 12;

// Route 2: variant 1 checks a in chain({a}, H) for each a; variant 2 checks
// A <= chain(A, H) for all 2^n - 1 nonempty A and throws BudgetError when
// order > subset_cap. Requires a hypersemigroup.
bool is_class_subsetdef(const HyperOp& h, RegularityClass c,
                        SubsetVariant variant,
                        std::size_t subset_cap = kDefaultSubsetCap);

// Route 3: f_a <= chain(f_a) for every point set f_a. Requires a
// hypersemigroup.
RouteVerdict is_class_fuzzy(const HyperOp& h, RegularityClass c);

// f <= chain(f). Accepts any hypergroupoid (left-fold convention).
bool fuzzy_inequality_holds(const HyperOp& h, RegularityClass c,
                            const FuzzySubset& f);

struct ClassEntry {
  RegularityClass cls = RegularityClass::Regular;
  bool elementwise = false;
  bool subset_singletons = false;
  // Not computed above the subset cap.
  std::optional<bool> subset_all;
  bool fuzzy = false;
  bool routes_agree = false;
  std::vector<Witness> elementwise_witnesses;
  std::vector<Witness> fuzzy_witnesses;

  // The class verdict (all routes agree on a passing table).
  bool holds() const noexcept { return elementwise; }
};

struct ClassificationReport {
  std::size_t order = 0;
  std::array<ClassEntry, 5> entries;

  const ClassEntry& operator[](RegularityClass c) const noexcept {
    return entries[index_of(c)];
  }
  bool all_routes_agree() const noexcept;
  // Bit i set iff class i (in kAllClasses order) holds.
  unsigned class_mask() const noexcept;
};

ClassificationReport classify(const HyperOp& h,
                              std::size_t subset_cap = kDefaultSubsetCap);

struct TheoremCheck {
  RegularityClass cls = RegularityClass::Regular;
  bool verdict = false;
  bool routes_agree = false;
  std::size_t trials = 0;
  // Random fuzzy subsets satisfying the class inequality.
  std::size_t satisfied = 0;
  // On a false verdict, the recorded failing point set must violate the
  // inequality.
  bool point_set_consistent = true;
  // A random f violating the inequality although the class holds.
  std::optional<FuzzySubset> counterexample;

  bool passed() const noexcept {
    return routes_agree && point_set_consistent && !counterexample;
  }
};

struct TheoremReport {
  std::size_t order = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::array<TheoremCheck, 5> checks;

  bool passed() const noexcept;
};

// Route agreement for all classes, then `random_trials` random fuzzy subsets
// per class checked against the inequality in the class-implies-inequality
// direction.
TheoremReport verify_theorems(const HyperOp& h, std::size_t random_trials,
                              std::uint64_t seed);

}  // namespace hsg
