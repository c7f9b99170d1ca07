#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "swarmfire/engine.hpp"
#include "swarmfire/montecarlo.hpp"

namespace swarmfire {

inline constexpr int kOutputSchemaVersion = 1;

/// Fixed column order of the summary CSV.
inline constexpr const char *kSummaryHeader =
    "run_index,strategy,n_swarms,detection_time_s,mission_time_s,fer,objective,complete";

/// Shortest %.6g rendering; used for every floating-point field.
std::string format_number(double v);

std::string summary_row(const RunSummary &r);
void write_summary_csv(std::ostream &os, const std::vector<RunSummary> &runs);

/// One trace record: time, UAV positions and modes, fire axes and states,
/// and the bookkeeping counters.
nlohmann::ordered_json trace_record(const WorldState &w);

nlohmann::ordered_json manifest(const ScenarioConfig &cfg, const std::string &command, int runs, int jobs);

nlohmann::ordered_json aggregate_json(const Aggregate &a);

/// Per-strategy aggregates followed by pairwise differences of means
/// (row minus column, in the order given).
nlohmann::ordered_json comparison_json(const std::vector<StrategyRuns> &results);

/// Writes `text` to `path`, creating parent directories. Throws
/// std::runtime_error when the file cannot be written.
void write_file(const std::filesystem::path &path, const std::string &text);

}  // namespace swarmfire
