#include "hsg/enumeration.hpp"

#include <algorithm>
#include <mutex>
#include <random>
#include <thread>
#include <vector>

namespace hsg {

namespace {

HyperOp starting_table(std::size_t order, bool allow_large) {
  check_exhaustive_budget(order, allow_large);
  return tables::constant(order, 0);
}

void tally(CensusReport& report, const HyperOp& h, std::uint64_t ordinal) {
  ++report.tables_seen;
  if (!is_hypersemigroup(h)) return;
  ++report.hypersemigroups;
  const ClassificationReport classes = classify(h);
  for (RegularityClass c : kAllClasses) {
    if (classes[c].holds()) ++report.class_counts[index_of(c)];
  }
  ++report.combination_counts[classes.class_mask()];
  if (!classes.all_routes_agree()) {
    ++report.route_disagreements;
    if (!report.first_disagreement || ordinal < *report.first_disagreement) {
      report.first_disagreement = ordinal;
    }
  }
  if (classes[RegularityClass::LeftQuasiRegular].holds() &&
      classes[RegularityClass::RightQuasiRegular].holds() &&
      !classes[RegularityClass::Semisimple].holds()) {
    ++report.quasi_regular_not_semisimple;
  }
}

// Runs `work(unit, partial)` for every unit in [0, units) on `jobs` threads,
// unit u going to worker u % jobs, then merges the partials in worker order.
CensusReport run_partitioned(
    CensusReport base, std::uint64_t units, unsigned jobs,
    const std::function<void(std::uint64_t, CensusReport&)>& work,
    const std::function<void(std::uint64_t, std::uint64_t)>& progress) {
  jobs = static_cast<unsigned>(
      std::clamp<std::uint64_t>(jobs, 1, std::max<std::uint64_t>(units, 1)));
  std::vector<CensusReport> partials(jobs);
  std::mutex progress_mutex;
  std::uint64_t finished = 0;

  auto worker = [&](unsigned j) {
    for (std::uint64_t u = j; u < units; u += jobs) {
      work(u, partials[j]);
      if (progress) {
        std::lock_guard lock(progress_mutex);
        progress(++finished, units);
      }
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(worker, j);
  }
  for (const auto& p : partials) base.merge(p);
  return base;
}

}  // namespace

std::optional<std::uint64_t> hypergroupoid_count(std::size_t order) {
  const Carrier carrier{order};
  const std::uint64_t base = (std::uint64_t{1} << carrier.order()) - 1;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < order * order; ++i) {
    if (total > UINT64_MAX / base) return std::nullopt;
    total *= base;
  }
  return total;
}

void check_exhaustive_budget(std::size_t order, bool allow_large) {
  const Carrier carrier{order};
  if (carrier.order() <= 2) return;
  if (carrier.order() == 3 && allow_large) return;
  const auto count = hypergroupoid_count(order);
  throw BudgetError(
      "exhaustive enumeration of order " + std::to_string(order) + " (" +
      (count ? std::to_string(*count) : std::string("> 2^64")) +
      " tables) exceeds the budget" +
      (order == 3 ? "; pass the explicit override to allow it" : ""));
}

HypergroupoidEnumerator::HypergroupoidEnumerator(std::size_t order,
                                                 bool allow_large)
    : table_(starting_table(order, allow_large)),
      first_free_(0),
      last_mask_(ElementSet::full(order).mask()) {}

HypergroupoidEnumerator::HypergroupoidEnumerator(std::size_t order,
                                                 ElementSet first_cell,
                                                 bool allow_large)
    : table_(starting_table(order, allow_large)),
      first_free_(1),
      last_mask_(ElementSet::full(order).mask()) {
  if (first_cell.empty() || !first_cell.within(order)) {
    throw InputError("first cell must be a nonempty subset of the carrier");
  }
  table_.cells_[0] = first_cell;
}

bool HypergroupoidEnumerator::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    return true;
  }
  auto& cells = table_.cells_;
  for (std::size_t i = cells.size(); i > first_free_; --i) {
    ElementSet& cell = cells[i - 1];
    if (cell.mask() < last_mask_) {
      cell = ElementSet::from_mask(cell.mask() + 1);
      return true;
    }
    cell = ElementSet::from_mask(1);
  }
  done_ = true;
  return false;
}

HyperOp random_hypergroupoid(std::size_t order, std::uint64_t seed) {
  const ElementSet::Mask last = ElementSet::full(order).mask();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<ElementSet::Mask> pick(1, last);
  std::vector<ElementSet> cells(order * order);
  for (auto& cell : cells) cell = ElementSet::from_mask(pick(rng));
  return HyperOp(order, std::move(cells));
}

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  // splitmix64 finalizer over seed + index * golden ratio.
  std::uint64_t z = seed + (index + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void CensusReport::merge(const CensusReport& other) {
  tables_seen += other.tables_seen;
  hypersemigroups += other.hypersemigroups;
  for (std::size_t i = 0; i < class_counts.size(); ++i) {
    class_counts[i] += other.class_counts[i];
  }
  for (std::size_t i = 0; i < combination_counts.size(); ++i) {
    combination_counts[i] += other.combination_counts[i];
  }
  route_disagreements += other.route_disagreements;
  quasi_regular_not_semisimple += other.quasi_regular_not_semisimple;
  if (other.first_disagreement &&
      (!first_disagreement || *other.first_disagreement < *first_disagreement)) {
    first_disagreement = other.first_disagreement;
  }
}

CensusReport census(std::size_t order, const CensusOptions& options) {
  CensusReport base;
  base.order = Carrier{order}.order();
  base.mode = options.mode;
  base.seed = options.seed;

  if (options.mode == PopulationMode::Sampled) {
    base.sample_count = options.sample_count;
    // Fixed-size index blocks, independent of the job count.
    constexpr std::uint64_t kBlock = 1024;
    const std::uint64_t total = options.sample_count;
    const std::uint64_t units = (total + kBlock - 1) / kBlock;
    return run_partitioned(
        base, units, options.jobs,
        [&](std::uint64_t unit, CensusReport& partial) {
          const std::uint64_t end = std::min(total, (unit + 1) * kBlock);
          for (std::uint64_t i = unit * kBlock; i < end; ++i) {
            tally(partial, random_hypergroupoid(order, sample_seed(options.seed, i)),
                  i);
          }
        },
        options.progress);
  }

  check_exhaustive_budget(order, options.allow_large);
  const ElementSet::Mask last = ElementSet::full(order).mask();
  // One unit per value of the first cell; ordinals follow enumeration order.
  const std::uint64_t per_unit = *hypergroupoid_count(order) / last;
  return run_partitioned(
      base, last, options.jobs,
      [&](std::uint64_t unit, CensusReport& partial) {
        HypergroupoidEnumerator it(
            order, ElementSet::from_mask(static_cast<ElementSet::Mask>(unit + 1)),
            options.allow_large);
        std::uint64_t ordinal = unit * per_unit;
        while (it.next()) tally(partial, it.current(), ordinal++);
      },
      options.progress);
}

std::optional<DivergenceFinding> find_divergence(const HyperOp& h) {
  for (RegularityClass c : kAllClasses) {
    for (Element a = 0; a < h.order(); ++a) {
      const bool definitional = find_definitional_witness(h, c, a).has_value();
      const bool fuzzy = point_inequality_holds(h, c, a);
      if (definitional != fuzzy) {
        return DivergenceFinding{h, c, a, definitional, fuzzy};
      }
    }
  }
  return std::nullopt;
}

bool confirm_divergence(const DivergenceFinding& finding) {
  const HyperOp& h = finding.table;
  const bool definitional =
      find_definitional_witness(h, finding.cls, finding.element).has_value();
  const bool fuzzy = point_inequality_holds(h, finding.cls, finding.element);
  return definitional == finding.definitional && fuzzy == finding.fuzzy &&
         definitional != fuzzy;
}

DivergenceSearch search_nonassociative_divergence(std::size_t order,
                                                  std::uint64_t budget,
                                                  std::uint64_t seed) {
  DivergenceSearch search;
  for (std::uint64_t i = 0; i < budget; ++i) {
    const HyperOp h = random_hypergroupoid(order, sample_seed(seed, i));
    ++search.tables_examined;
    if (is_hypersemigroup(h)) continue;
    ++search.nonassociative_examined;
    if (auto finding = find_divergence(h)) {
      search.finding = std::move(finding);
      break;
    }
  }
  return search;
}

DivergenceSearch search_nonassociative_divergence_exhaustive(
    std::size_t order, bool allow_large) {
  DivergenceSearch search;
  HypergroupoidEnumerator it(order, allow_large);
  while (it.next()) {
    ++search.tables_examined;
    if (is_hypersemigroup(it.current())) continue;
    ++search.nonassociative_examined;
    if (auto finding = find_divergence(it.current())) {
      search.finding = std::move(finding);
      break;
    }
  }
  return search;
}

}  // namespace hsg
