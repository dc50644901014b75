#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>

#include "hsg/classifiers.hpp"
#include "hsg/hyperop.hpp"

namespace hsg {

// (2^n - 1)^(n^2), or nullopt when it does not fit in 64 bits.
std::optional<std::uint64_t> hypergroupoid_count(std::size_t order);

// Exhaustive runs: orders 1 and 2 always, order 3 only with allow_large,
// never above. Throws BudgetError otherwise.
void check_exhaustive_budget(std::size_t order, bool allow_large);

// Walks every hyperoperation table of a given order exactly once.
//
// Order: cells row-major, the first cell most significant; each cell runs
// through the nonempty subsets in ascending bitmask order. So the first table
// has every cell {0} and the last has every cell equal to the carrier.
//
//   HypergroupoidEnumerator it(2);
//   while (it.next()) use(it.current());
class HypergroupoidEnumerator {
 public:
  explicit HypergroupoidEnumerator(std::size_t order, bool allow_large = false);

  // Only the tables whose cell (0,0) is `first_cell`; the census partitions
  // work this way.
  HypergroupoidEnumerator(std::size_t order, ElementSet first_cell,
                          bool allow_large = false);

  bool next();
  const HyperOp& current() const noexcept { return table_; }

 private:
  HyperOp table_;
  std::size_t first_free_;
  ElementSet::Mask last_mask_;
  bool started_ = false;
  bool done_ = false;
};

// Each cell uniform over the 2^n - 1 nonempty subsets, drawn row-major from
// mt19937_64(seed).
HyperOp random_hypergroupoid(std::size_t order, std::uint64_t seed);

// Seed of the index-th table in a sampled population. Lets sampled runs be
// split across workers without changing which tables are drawn.
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) noexcept;

enum class PopulationMode { Exhaustive, Sampled };

struct CensusOptions {
  PopulationMode mode = PopulationMode::Exhaustive;
  std::uint64_t sample_count = 0;
  std::uint64_t seed = 0;
  // Permit exhaustive order 3.
  bool allow_large = false;
  unsigned jobs = 1;
  // Called with (finished work units, total units) as partitions complete.
  std::function<void(std::uint64_t, std::uint64_t)> progress;
};

struct CensusReport {
  std::size_t order = 0;
  PopulationMode mode = PopulationMode::Exhaustive;
  std::uint64_t sample_count = 0;
  std::uint64_t seed = 0;

  std::uint64_t tables_seen = 0;
  std::uint64_t hypersemigroups = 0;
  std::array<std::uint64_t, 5> class_counts{};
  // Indexed by ClassificationReport::class_mask().
  std::array<std::uint64_t, 32> combination_counts{};
  std::uint64_t route_disagreements = 0;
  // Left and right quasi-regular but not semisimple. An observation, not a
  // failure.
  std::uint64_t quasi_regular_not_semisimple = 0;
  // Lowest-ordinal table whose routes disagreed, if any.
  std::optional<std::uint64_t> first_disagreement;

  void merge(const CensusReport& other);
  bool passed() const noexcept { return route_disagreements == 0; }

  friend bool operator==(const CensusReport&, const CensusReport&) = default;
};

CensusReport census(std::size_t order, const CensusOptions& options);

// A hypergroupoid on which the elementwise definition and the left-fold
// point-set inequality of some class disagree at some element.
struct DivergenceFinding {
  HyperOp table;
  RegularityClass cls;
  Element element;
  bool definitional;
  bool fuzzy;
};

struct DivergenceSearch {
  std::uint64_t tables_examined = 0;
  std::uint64_t nonassociative_examined = 0;
  std::optional<DivergenceFinding> finding;
};

// First divergence on `h` in class order, then element order.
std::optional<DivergenceFinding> find_divergence(const HyperOp& h);

// Recomputes both sides of a finding.
bool confirm_divergence(const DivergenceFinding& finding);

// Draws `budget` random tables (table i from sample_seed(seed, i)), skips the
// associative ones and stops at the first divergence.
DivergenceSearch search_nonassociative_divergence(std::size_t order,
                                                  std::uint64_t budget,
                                                  std::uint64_t seed);

// Same, over every non-associative table in enumeration order.
DivergenceSearch search_nonassociative_divergence_exhaustive(
    std::size_t order, bool allow_large = false);

}  // namespace hsg
