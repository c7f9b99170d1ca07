#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "swarmfire/engine.hpp"

namespace swarmfire {

/// Per-run scalars kept by the Monte-Carlo drivers.
struct RunSummary {
  std::uint64_t run_index = 0;
  Strategy strategy = Strategy::Mscidc;
  int n_swarms = 0;
  double detection_time = 0.0;
  double mission_time = 0.0;
  double fer = 0.0;
  double objective = 0.0;
  bool complete = false;

  bool operator==(const RunSummary &) const = default;
};

RunSummary summarize(const RunResult &r);

/// Runs 0..runs-1 in parallel over `jobs` OpenMP threads (0 = runtime
/// default). Results are indexed by run, so the output does not depend on
/// the thread count or schedule.
std::vector<RunSummary> monte_carlo(const ScenarioConfig &cfg, int runs, int jobs = 0);

/// Plain loop over the same runs; reference for the parallel driver.
std::vector<RunSummary> monte_carlo_serial(const ScenarioConfig &cfg, int runs);

struct Statistics {
  int n = 0;
  double mean = 0.0;
  double stddev = 0.0;  ///< sample standard deviation
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
};

/// Order-independent up to rounding: values are sorted before summation.
Statistics describe(std::vector<double> values);

struct Aggregate {
  Strategy strategy = Strategy::Mscidc;
  int n_swarms = 0;
  int runs = 0;
  int incomplete = 0;
  Statistics detection_time;
  Statistics mission_time;
  Statistics fer;
  Statistics objective;
};

Aggregate aggregate(const std::vector<RunSummary> &runs);

struct StrategyRuns {
  Strategy strategy = Strategy::Mscidc;
  std::vector<RunSummary> runs;
  Aggregate stats;
};

/// Paired comparison: every strategy sees the same run indices and hence the
/// same fires and initial UAV positions.
std::vector<StrategyRuns> compare(const ScenarioConfig &cfg, const std::vector<Strategy> &strategies, int runs,
                                  int jobs = 0);

}  // namespace swarmfire
