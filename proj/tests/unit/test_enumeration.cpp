#include <cmath>
#include <map>
#include <set>

#include "doctest.h"
#include "hsg/enumeration.hpp"
#include "hsg/io.hpp"
#include "oracle.hpp"

using namespace hsg;

TEST_CASE("hypergroupoid_count") {
  CHECK(hypergroupoid_count(1) == 1);
  CHECK(hypergroupoid_count(2) == 81);
  CHECK(hypergroupoid_count(3) == 40'353'607);
  CHECK(hypergroupoid_count(4) == 6'568'408'355'712'890'625ULL);  // 15^16
  CHECK_FALSE(hypergroupoid_count(5).has_value());
}

TEST_CASE("enumeration") {
  SUBCASE("order 1 has one table") {
    HypergroupoidEnumerator it(1);
    REQUIRE(it.next());
    CHECK(it.current() == tables::full(1));
    CHECK_FALSE(it.next());
    CHECK_FALSE(it.next());
  }

  SUBCASE("order 2: 81 distinct tables in documented order") {
    std::set<std::vector<ElementSet::Mask>> seen;
    std::vector<HyperOp> order;
    HypergroupoidEnumerator it(2);
    while (it.next()) {
      std::vector<ElementSet::Mask> key;
      for (auto c : it.current().cells()) key.push_back(c.mask());
      seen.insert(key);
      order.push_back(it.current());
    }
    CHECK(order.size() == 81);
    CHECK(seen.size() == 81);
    CHECK(order.front() == tables::constant(2, 0));
    CHECK(order.back() == tables::full(2));
    // The last cell varies fastest.
    CHECK(order[1].cell(1, 1) == ElementSet{1});
    CHECK(order[1].cell(0, 0) == ElementSet{0});
    CHECK(order[27].cell(0, 0) == ElementSet{1});
  }

  SUBCASE("partitions on the first cell are disjoint and cover everything") {
    std::size_t total = 0;
    for (ElementSet::Mask m = 1; m <= 3; ++m) {
      HypergroupoidEnumerator it(2, ElementSet::from_mask(m));
      while (it.next()) {
        CHECK(it.current().cell(0, 0).mask() == m);
        ++total;
      }
    }
    CHECK(total == 81);
    CHECK_THROWS_AS(HypergroupoidEnumerator(2, ElementSet{}), InputError);
  }

  SUBCASE("budget") {
    CHECK_THROWS_AS(HypergroupoidEnumerator(3), BudgetError);
    CHECK_THROWS_AS(HypergroupoidEnumerator(4, true), BudgetError);
    HypergroupoidEnumerator allowed(3, true);
    CHECK(allowed.next());
  }

  SUBCASE("agrees with the oracle's generator") {
    std::size_t oracle_tables = 0;
    std::size_t oracle_semigroups = 0;
    oracle::for_each_table(2, [&](const oracle::Table& t) {
      ++oracle_tables;
      if (oracle::associative(t)) ++oracle_semigroups;
    });
    std::size_t semigroups = 0;
    HypergroupoidEnumerator it(2);
    while (it.next()) semigroups += is_hypersemigroup(it.current()) ? 1 : 0;
    CHECK(oracle_tables == 81);
    CHECK(semigroups == oracle_semigroups);
  }
}

TEST_CASE("random_hypergroupoid") {
  CHECK(random_hypergroupoid(3, 77) == random_hypergroupoid(3, 77));
  CHECK(random_hypergroupoid(1, 5) == tables::full(1));

  // Each cell is uniform over the 3 nonempty subsets of {0,1}: per cell and
  // subset the count over 10^4 draws stays within 3 sigma of 10^4/3.
  constexpr int kDraws = 10'000;
  std::map<std::pair<std::size_t, ElementSet::Mask>, int> counts;
  for (int seed = 0; seed < kDraws; ++seed) {
    const HyperOp h = random_hypergroupoid(2, seed);
    for (std::size_t i = 0; i < 4; ++i) ++counts[{i, h.cells()[i].mask()}];
  }
  const double p = 1.0 / 3.0;
  const double mean = kDraws * p;
  const double sigma = std::sqrt(kDraws * p * (1 - p));
  CHECK(counts.size() == 12);
  for (const auto& [key, count] : counts) {
    CHECK(std::abs(count - mean) <= 3 * sigma);
  }
}

TEST_CASE("census") {
  SUBCASE("order 1") {
    const CensusReport r = census(1, {});
    CHECK(r.tables_seen == 1);
    CHECK(r.hypersemigroups == 1);
    for (auto c : r.class_counts) CHECK(c == 1);
    CHECK(r.combination_counts[31] == 1);
    CHECK(r.passed());
  }

  SUBCASE("order 2 exhaustive") {
    const CensusReport r = census(2, {});
    CHECK(r.tables_seen == 81);
    CHECK(r.route_disagreements == 0);
    std::size_t oracle_semigroups = 0;
    oracle::for_each_table(2, [&](const oracle::Table& t) {
      oracle_semigroups += oracle::associative(t) ? 1 : 0;
    });
    CHECK(r.hypersemigroups == oracle_semigroups);
    std::uint64_t sum = 0;
    for (auto c : r.combination_counts) sum += c;
    CHECK(sum == r.hypersemigroups);
    for (auto c : r.class_counts) CHECK(c <= r.hypersemigroups);
  }

  SUBCASE("order 3 exhaustive needs the override") {
    CHECK_THROWS_AS(census(3, {}), BudgetError);
  }

  SUBCASE("job count does not change the report") {
    CensusOptions one_job;
    CensusOptions three_jobs;
    three_jobs.jobs = 3;
    CHECK(census(2, one_job) == census(2, three_jobs));

    CensusOptions sampled;
    sampled.mode = PopulationMode::Sampled;
    sampled.sample_count = 3000;
    sampled.seed = 5;
    const CensusReport a = census(3, sampled);
    sampled.jobs = 4;
    const CensusReport b = census(3, sampled);
    CHECK(a == b);
    CHECK(format_census(a) == format_census(b));
    CHECK(a.tables_seen == 3000);
    CHECK(a.route_disagreements == 0);
  }

  SUBCASE("progress reports every partition") {
    CensusOptions opts;
    std::uint64_t calls = 0;
    std::uint64_t last_total = 0;
    opts.progress = [&](std::uint64_t, std::uint64_t total) {
      ++calls;
      last_total = total;
    };
    census(2, opts);
    CHECK(calls == 3);
    CHECK(last_total == 3);
  }
}

TEST_CASE("non-associative divergence search") {
  SUBCASE("budget 0 finds nothing") {
    const auto s = search_nonassociative_divergence(2, 0, 1);
    CHECK(s.tables_examined == 0);
    CHECK_FALSE(s.finding);
    CHECK(format_divergence(s).find("none found") != std::string::npos);
  }

  SUBCASE("order 1 has no non-associative table") {
    const auto s = search_nonassociative_divergence(1, 10, 1);
    CHECK(s.tables_examined == 10);
    CHECK(s.nonassociative_examined == 0);
  }

  SUBCASE("exhaustive order 2 is deterministic and findings re-verify") {
    const auto a = search_nonassociative_divergence_exhaustive(2);
    const auto b = search_nonassociative_divergence_exhaustive(2);
    CHECK(a.tables_examined == b.tables_examined);
    CHECK(a.nonassociative_examined == b.nonassociative_examined);
    CHECK(a.finding.has_value() == b.finding.has_value());
    if (a.finding) {
      CHECK(a.finding->table == b.finding->table);
      CHECK_FALSE(is_hypersemigroup(a.finding->table));
      DivergenceFinding reparsed = *a.finding;
      reparsed.table = parse_table(serialize_table(a.finding->table));
      CHECK(confirm_divergence(reparsed));
    } else {
      CHECK(a.nonassociative_examined == 81 - census(2, {}).hypersemigroups);
    }
  }

  SUBCASE("random search findings re-verify") {
    const auto s = search_nonassociative_divergence(3, 2000, 9);
    if (s.finding) {
      CHECK(confirm_divergence(*s.finding));
      DivergenceFinding flipped = *s.finding;
      flipped.fuzzy = !flipped.fuzzy;
      CHECK_FALSE(confirm_divergence(flipped));
    }
  }
}
