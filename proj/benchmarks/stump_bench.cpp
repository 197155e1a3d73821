#include <benchmark/benchmark.h>

#include "bench_data.hpp"
#include "boostcraft/stump.hpp"

using namespace boostcraft;

static void BM_StumpTrainerBuild(benchmark::State& state) {
  const Dataset d = bench::synthetic(static_cast<std::size_t>(state.range(0)), 10);
  for (auto _ : state) benchmark::DoNotOptimize(StumpTrainer(d));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_StumpTrainerBuild)->RangeMultiplier(10)->Range(1000, 100000)->Complexity();

static void BM_StumpSearch(benchmark::State& state) {
  const Dataset d = bench::synthetic(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  const StumpTrainer trainer(d);
  const auto w = WeightDistribution::uniform(d.size());
  for (auto _ : state) benchmark::DoNotOptimize(trainer.train(w));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(1));
}
BENCHMARK(BM_StumpSearch)->Args({1000, 10})->Args({10000, 10})->Args({100000, 10})->Args({10000, 85});
