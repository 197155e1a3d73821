#include <benchmark/benchmark.h>

#include "bench_data.hpp"
#include "boostcraft/boosting.hpp"

using namespace boostcraft;

static void BM_Train(benchmark::State& state) {
  const Dataset d = bench::synthetic(5000, 10);
  StrategyConfig config{static_cast<StrategyId>(state.range(0)), 50};
  if (uses_fixed_costs(config.strategy)) config.fixed_costs = FixedCosts{1.0, 0.5};
  TrainOptions options;
  options.record_diagnostics = false;
  for (auto _ : state) benchmark::DoNotOptimize(train(config, d, options));
  state.SetLabel(std::string(to_string(config.strategy)));
}
BENCHMARK(BM_Train)
    ->Arg(static_cast<int>(StrategyId::adaboost))
    ->Arg(static_cast<int>(StrategyId::adacc1))
    ->Arg(static_cast<int>(StrategyId::adacc2))
    ->Arg(static_cast<int>(StrategyId::adac2))
    ->Unit(benchmark::kMillisecond);
