#include <random>

#include <benchmark/benchmark.h>

#include "hsg/classifiers.hpp"
#include "hsg/enumeration.hpp"
#include "hsg/fuzzy.hpp"

namespace {

hsg::HyperOp some_hypersemigroup(std::size_t n) {
  for (std::uint64_t i = 0;; ++i) {
    hsg::HyperOp h = hsg::random_hypergroupoid(n, hsg::sample_seed(1, i));
    if (hsg::is_hypersemigroup(h)) return h;
  }
}

void BM_SetProduct(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const hsg::HyperOp h = hsg::random_hypergroupoid(n, 3);
  const hsg::ElementSet all = hsg::ElementSet::full(n);
  for (auto _ : state) benchmark::DoNotOptimize(hsg::set_product(h, all, all));
}
BENCHMARK(BM_SetProduct)->Arg(3)->Arg(8)->Arg(16);

void BM_IsHypersemigroup(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const hsg::HyperOp h = hsg::tables::full(n);
  for (auto _ : state) benchmark::DoNotOptimize(hsg::is_hypersemigroup(h));
}
BENCHMARK(BM_IsHypersemigroup)->Arg(3)->Arg(8)->Arg(16);

void BM_Compose(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const hsg::HyperOp h = hsg::random_hypergroupoid(n, 5);
  std::mt19937_64 rng(7);
  const auto f = hsg::random_fuzzy_subset(h.carrier(), rng);
  const auto g = hsg::random_fuzzy_subset(h.carrier(), rng);
  for (auto _ : state) benchmark::DoNotOptimize(hsg::compose(h, f, g));
}
BENCHMARK(BM_Compose)->Arg(3)->Arg(8)->Arg(16);

void BM_Classify(benchmark::State& state) {
  const hsg::HyperOp h = some_hypersemigroup(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hsg::classify(h));
}
BENCHMARK(BM_Classify)->Arg(2)->Arg(3);

void BM_CensusOrder2(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hsg::census(2, {}));
}
BENCHMARK(BM_CensusOrder2);

void BM_CensusSampledOrder3(benchmark::State& state) {
  hsg::CensusOptions options;
  options.mode = hsg::PopulationMode::Sampled;
  options.sample_count = 10'000;
  for (auto _ : state) benchmark::DoNotOptimize(hsg::census(3, options));
}
BENCHMARK(BM_CensusSampledOrder3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
