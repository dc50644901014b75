#include <random>

#include "doctest.h"
#include "hsg/classifiers.hpp"
#include "hsg/enumeration.hpp"
#include "oracle.hpp"

using namespace hsg;

namespace {

// cell(0,0) = {1}, others {0}; not associative: (0o0)*{1} = {1}*{1} = {0}
// while {0}*(0o1) = {0}*{0} = {1}.
HyperOp non_associative() {
  return HyperOp(2, {ElementSet{1}, ElementSet{0}, ElementSet{0}, ElementSet{0}});
}

template <typename F>
void for_each_order2_hypersemigroup(F&& visit) {
  HypergroupoidEnumerator it(2);
  while (it.next()) {
    if (is_hypersemigroup(it.current())) visit(it.current());
  }
}

}  // namespace

TEST_CASE("fuzzy patterns") {
  using S = PatternSlot;
  auto as_vec = [](RegularityClass c) {
    auto p = fuzzy_pattern(c);
    return std::vector<S>(p.begin(), p.end());
  };
  CHECK(as_vec(RegularityClass::Regular) == std::vector{S::Subject, S::Top, S::Subject});
  CHECK(as_vec(RegularityClass::IntraRegular) ==
        std::vector{S::Top, S::Subject, S::Subject, S::Top});
  CHECK(as_vec(RegularityClass::LeftQuasiRegular) ==
        std::vector{S::Top, S::Subject, S::Top, S::Subject});
  CHECK(as_vec(RegularityClass::RightQuasiRegular) ==
        std::vector{S::Subject, S::Top, S::Subject, S::Top});
  CHECK(as_vec(RegularityClass::Semisimple) ==
        std::vector{S::Top, S::Subject, S::Top, S::Subject, S::Top});
}

TEST_CASE("elementwise route") {
  SUBCASE("left-zero table: every class, witness x = a style") {
    const HyperOp h = tables::left_zero(2);
    for (RegularityClass c : kAllClasses) {
      const auto v = is_class_elementwise(h, c);
      CHECK(v.holds);
      REQUIRE(v.witnesses.size() == 2);
      for (const auto& w : v.witnesses) {
        CHECK(w.positive);
        CHECK(w.elements.size() == witness_arity(c));
        CHECK(reverify(h, w));
      }
    }
  }

  SUBCASE("constant table fails everywhere at a = 1") {
    const HyperOp h = tables::constant(2);
    for (RegularityClass c : kAllClasses) {
      const auto v = is_class_elementwise(h, c);
      CHECK_FALSE(v.holds);
      REQUIRE(v.witnesses.size() == 1);
      CHECK(v.witnesses[0].element == 1);
      CHECK_FALSE(v.witnesses[0].positive);
      CHECK(reverify(h, v.witnesses[0]));
    }
  }

  SUBCASE("full table") {
    for (RegularityClass c : kAllClasses) {
      CHECK(is_class_elementwise(tables::full(3), c).holds);
    }
  }

  SUBCASE("witness search is lexicographic") {
    // On the full table every tuple works, so the first one is all zeros.
    const auto v = is_class_elementwise(tables::full(2), RegularityClass::Semisimple);
    CHECK(v.witnesses[1].elements == std::vector<Element>{0, 0, 0});
  }

  SUBCASE("agrees with the oracle on every order-2 hypersemigroup") {
    for_each_order2_hypersemigroup([](const HyperOp& h) {
      const auto t = oracle::from_hyperop(h);
      for (RegularityClass c : kAllClasses) {
        const auto v = is_class_elementwise(h, c);
        REQUIRE(v.holds == oracle::class_holds(t, static_cast<int>(index_of(c))));
        for (const auto& w : v.witnesses) REQUIRE(reverify(h, w));
      }
    });
  }
}

TEST_CASE("subset route") {
  CHECK(is_class_subsetdef(tables::left_zero(2), RegularityClass::Regular,
                           SubsetVariant::Singletons));
  CHECK_FALSE(is_class_subsetdef(tables::constant(2), RegularityClass::Regular,
                                 SubsetVariant::Singletons));

  for_each_order2_hypersemigroup([](const HyperOp& h) {
    for (RegularityClass c : kAllClasses) {
      REQUIRE(is_class_subsetdef(h, c, SubsetVariant::Singletons) ==
              is_class_subsetdef(h, c, SubsetVariant::AllSubsets));
    }
  });

  CHECK_THROWS_AS(is_class_subsetdef(tables::full(3), RegularityClass::Regular,
                                     SubsetVariant::AllSubsets, 2),
                  BudgetError);
  CHECK_THROWS_AS(is_class_subsetdef(tables::full(13), RegularityClass::Regular,
                                     SubsetVariant::AllSubsets),
                  BudgetError);
  CHECK(is_class_subsetdef(tables::full(13), RegularityClass::Regular,
                           SubsetVariant::Singletons));
}

TEST_CASE("fuzzy route") {
  SUBCASE("full table is regular") {
    CHECK(is_class_fuzzy(tables::full(2), RegularityClass::Regular).holds);
  }

  SUBCASE("constant table: (f_1 o 1 o f_1)(1) = 0") {
    const HyperOp h = tables::constant(2);
    const auto v = is_class_fuzzy(h, RegularityClass::Regular);
    CHECK_FALSE(v.holds);
    REQUIRE(v.witnesses.size() == 1);
    CHECK(v.witnesses[0].element == 1);
    REQUIRE(v.witnesses[0].failing_subset);
    CHECK(*v.witnesses[0].failing_subset == point(h.carrier(), 1));
    CHECK(evaluate_pattern(h, RegularityClass::Regular, point(h.carrier(), 1))[1] ==
          FuzzyValue::zero());
    CHECK(reverify(h, v.witnesses[0]));
  }

  SUBCASE("left-zero table is semisimple; chain evaluates to 1 at each a") {
    const HyperOp h = tables::left_zero(2);
    CHECK(is_class_fuzzy(h, RegularityClass::Semisimple).holds);
    for (Element a = 0; a < 2; ++a) {
      const auto chain =
          evaluate_pattern(h, RegularityClass::Semisimple, point(h.carrier(), a));
      CHECK(chain[a] == FuzzyValue::one());
    }
  }

  SUBCASE("library chain matches the oracle's right-associated chain") {
    std::mt19937_64 rng(8);
    for_each_order2_hypersemigroup([&](const HyperOp& h) {
      const auto t = oracle::from_hyperop(h);
      for (RegularityClass c : kAllClasses) {
        for (int trial = 0; trial < 10; ++trial) {
          const auto f = random_fuzzy_subset(h.carrier(), rng);
          REQUIRE(oracle::from_fuzzy(evaluate_pattern(h, c, f)) ==
                  oracle::pattern_right_assoc(t, static_cast<int>(index_of(c)),
                                              oracle::from_fuzzy(f)));
        }
      }
    });
  }
}

TEST_CASE("fuzzy_inequality_holds") {
  const Carrier two{2};
  CHECK(fuzzy_inequality_holds(tables::full(2), RegularityClass::IntraRegular, one(two)));

  // The zero subset is the bottom, including on non-associative tables.
  for (const HyperOp& h : {tables::constant(2), tables::left_zero(2), non_associative()}) {
    for (RegularityClass c : kAllClasses) {
      CHECK(fuzzy_inequality_holds(h, c, FuzzySubset(two)));
    }
  }

  CHECK_THROWS_AS(fuzzy_inequality_holds(tables::full(3), RegularityClass::Regular,
                                         one(two)),
                  InputError);

  std::mt19937_64 rng(99);
  for_each_order2_hypersemigroup([&](const HyperOp& h) {
    for (RegularityClass c : kAllClasses) {
      if (!is_class_fuzzy(h, c).holds) continue;
      for (int trial = 0; trial < 1000; ++trial) {
        REQUIRE(fuzzy_inequality_holds(h, c, random_fuzzy_subset(h.carrier(), rng)));
      }
    }
  });
}

TEST_CASE("classify") {
  SUBCASE("left-zero") {
    const auto r = classify(tables::left_zero(2));
    CHECK(r.all_routes_agree());
    CHECK(r.class_mask() == 0b11111);
    for (const auto& e : r.entries) {
      CHECK(e.elementwise);
      CHECK(e.subset_singletons);
      CHECK(e.subset_all == std::optional<bool>(true));
      CHECK(e.fuzzy);
    }
  }

  SUBCASE("constant") {
    const auto r = classify(tables::constant(2));
    CHECK(r.all_routes_agree());
    CHECK(r.class_mask() == 0);
    for (const auto& e : r.entries) {
      CHECK_FALSE(e.elementwise);
      CHECK_FALSE(e.subset_singletons);
      CHECK(e.subset_all == std::optional<bool>(false));
      CHECK_FALSE(e.fuzzy);
    }
  }

  SUBCASE("order 1") {
    const auto r = classify(tables::full(1));
    CHECK(r.class_mask() == 0b11111);
    CHECK(r.all_routes_agree());
  }

  SUBCASE("subset variant 2 is skipped above the cap") {
    const auto r = classify(tables::full(3), 2);
    CHECK_FALSE(r[RegularityClass::Regular].subset_all.has_value());
    CHECK(r.all_routes_agree());
  }

  SUBCASE("non-associative input is rejected by every route") {
    const HyperOp h = non_associative();
    CHECK_FALSE(is_hypersemigroup(h));
    CHECK_THROWS_AS(classify(h), NotHypersemigroupError);
    CHECK_THROWS_AS(is_class_elementwise(h, RegularityClass::Regular),
                    NotHypersemigroupError);
    CHECK_THROWS_AS(is_class_subsetdef(h, RegularityClass::Regular,
                                       SubsetVariant::Singletons),
                    NotHypersemigroupError);
    CHECK_THROWS_AS(is_class_fuzzy(h, RegularityClass::Regular),
                    NotHypersemigroupError);
    CHECK_THROWS_AS(verify_theorems(h, 1, 0), NotHypersemigroupError);
  }
}

TEST_CASE("verify_theorems") {
  SUBCASE("constant table") {
    const auto r = verify_theorems(tables::constant(2), 1000, 42);
    CHECK(r.passed());
    for (const auto& c : r.checks) {
      CHECK_FALSE(c.verdict);
      CHECK(c.point_set_consistent);
      CHECK(c.trials == 1000);
    }
  }

  SUBCASE("full table: every sample satisfies every inequality") {
    const auto r = verify_theorems(tables::full(2), 1000, 42);
    CHECK(r.passed());
    for (const auto& c : r.checks) {
      CHECK(c.verdict);
      CHECK(c.satisfied == 1000);
      CHECK_FALSE(c.counterexample);
    }
  }

  SUBCASE("deterministic for a fixed seed") {
    const HyperOp h = tables::left_zero(3);
    const auto a = verify_theorems(h, 200, 7);
    const auto b = verify_theorems(h, 200, 7);
    for (std::size_t i = 0; i < 5; ++i) {
      CHECK(a.checks[i].satisfied == b.checks[i].satisfied);
    }
  }

  SUBCASE("every order-2 hypersemigroup passes") {
    for_each_order2_hypersemigroup([](const HyperOp& h) {
      REQUIRE(verify_theorems(h, 100, 1).passed());
    });
  }
}

TEST_CASE("definition_holds_with checks its arguments") {
  const HyperOp h = tables::full(2);
  CHECK_THROWS_AS(definition_holds_with(h, RegularityClass::Regular, 0,
                                        std::vector<Element>{0, 1}),
                  InputError);
  CHECK_THROWS_AS(definition_holds_with(h, RegularityClass::Regular, 0,
                                        std::vector<Element>{5}),
                  InputError);
  CHECK(definition_holds_with(h, RegularityClass::Regular, 1,
                              std::vector<Element>{0}));
}
