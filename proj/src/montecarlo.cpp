#include "swarmfire/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <omp.h>

namespace swarmfire {

namespace {

RunOptions summary_options() {
  RunOptions o;
  o.record_series = false;
  o.record_events = false;
  return o;
}

double quantile(const std::vector<double> &sorted, double q) {
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

}  // namespace

RunSummary summarize(const RunResult &r) {
  return {r.run_index, r.strategy, r.n_swarms, r.detection_time, r.mission_time, r.fer, r.objective, r.complete};
}

std::vector<RunSummary> monte_carlo(const ScenarioConfig &cfg, int runs, int jobs) {
  if (runs < 1) throw std::invalid_argument("monte_carlo: runs must be >= 1");
  std::vector<RunSummary> out(static_cast<std::size_t>(runs));
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  const RunOptions options = summary_options();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (int i = 0; i < runs; ++i) {
    out[static_cast<std::size_t>(i)] = summarize(run(cfg, static_cast<std::uint64_t>(i), options));
  }
  return out;
}

std::vector<RunSummary> monte_carlo_serial(const ScenarioConfig &cfg, int runs) {
  if (runs < 1) throw std::invalid_argument("monte_carlo: runs must be >= 1");
  std::vector<RunSummary> out;
  out.reserve(static_cast<std::size_t>(runs));
  for (int i = 0; i < runs; ++i) out.push_back(summarize(run(cfg, static_cast<std::uint64_t>(i), summary_options())));
  return out;
}

Statistics describe(std::vector<double> values) {
  Statistics s;
  s.n = static_cast<int>(values.size());
  if (values.empty()) return s;
  std::sort(values.begin(), values.end());
  // Neumaier summation over the sorted values.
  double sum = 0.0, comp = 0.0;
  for (double v : values) {
    const double t = sum + v;
    comp += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
    sum = t;
  }
  s.mean = (sum + comp) / s.n;
  double ss = 0.0;
  for (double v : values) ss += (v - s.mean) * (v - s.mean);
  s.stddev = s.n > 1 ? std::sqrt(ss / (s.n - 1)) : 0.0;
  s.min = values.front();
  s.max = values.back();
  s.q1 = quantile(values, 0.25);
  s.median = quantile(values, 0.5);
  s.q3 = quantile(values, 0.75);
  return s;
}

Aggregate aggregate(const std::vector<RunSummary> &runs) {
  Aggregate a;
  a.runs = static_cast<int>(runs.size());
  if (runs.empty()) return a;
  a.strategy = runs.front().strategy;
  a.n_swarms = runs.front().n_swarms;
  std::vector<double> det, mis, fer, obj;
  for (const auto &r : runs) {
    det.push_back(r.detection_time);
    mis.push_back(r.mission_time);
    fer.push_back(r.fer);
    obj.push_back(r.objective);
    if (!r.complete) ++a.incomplete;
  }
  a.detection_time = describe(std::move(det));
  a.mission_time = describe(std::move(mis));
  a.fer = describe(std::move(fer));
  a.objective = describe(std::move(obj));
  return a;
}

std::vector<StrategyRuns> compare(const ScenarioConfig &cfg, const std::vector<Strategy> &strategies, int runs,
                                  int jobs) {
  std::vector<StrategyRuns> out;
  for (Strategy s : strategies) {
    ScenarioConfig c = cfg;
    c.engine.strategy = s;
    StrategyRuns sr;
    sr.strategy = s;
    sr.runs = monte_carlo(c, runs, jobs);
    sr.stats = aggregate(sr.runs);
    out.push_back(std::move(sr));
  }
  return out;
}

}  // namespace swarmfire
