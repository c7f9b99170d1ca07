#include <benchmark/benchmark.h>

#include "swarmfire/montecarlo.hpp"

using namespace swarmfire;

namespace {

ScenarioConfig bench_config() {
  ScenarioConfig cfg = *preset("pine-table1");
  cfg.engine.t_max = 3600.0;
  return cfg;
}

void BM_MonteCarloSerial(benchmark::State &state) {
  const ScenarioConfig cfg = bench_config();
  const int runs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(monte_carlo_serial(cfg, runs));
  state.SetItemsProcessed(state.iterations() * runs);
}

void BM_MonteCarloOpenMP(benchmark::State &state) {
  const ScenarioConfig cfg = bench_config();
  const int runs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(monte_carlo(cfg, runs));
  state.SetItemsProcessed(state.iterations() * runs);
}

void BM_SingleTick(benchmark::State &state) {
  const ScenarioConfig cfg = bench_config();
  WorldState w = init_world(cfg, 0);
  for (auto _ : state) {
    if (w.time >= cfg.engine.t_max) w = init_world(cfg, 0);
    tick(w, cfg);
  }
}

}  // namespace

BENCHMARK(BM_MonteCarloSerial)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MonteCarloOpenMP)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SingleTick)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
