#include "swarmfire/output.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace swarmfire {

namespace {

std::string_view fire_state_name(FireState s) {
  switch (s) {
    case FireState::Burning:
      return "burning";
    case FireState::UnderMitigation:
      return "under_mitigation";
    case FireState::Extinguished:
      return "extinguished";
  }
  return "unknown";
}

nlohmann::ordered_json stats_json(const Statistics &s) {
  return {{"n", s.n},           {"mean", s.mean},     {"std", s.stddev}, {"min", s.min},
          {"q1", s.q1},         {"median", s.median}, {"q3", s.q3},      {"max", s.max}};
}

}  // namespace

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string summary_row(const RunSummary &r) {
  std::string row = std::to_string(r.run_index);
  row += ',';
  row += to_string(r.strategy);
  row += ',' + std::to_string(r.n_swarms);
  row += ',' + format_number(r.detection_time);
  row += ',' + format_number(r.mission_time);
  row += ',' + format_number(r.fer);
  row += ',' + format_number(r.objective);
  row += r.complete ? ",1" : ",0";
  return row;
}

void write_summary_csv(std::ostream &os, const std::vector<RunSummary> &runs) {
  os << kSummaryHeader << '\n';
  for (const auto &r : runs) os << summary_row(r) << '\n';
}

nlohmann::ordered_json trace_record(const WorldState &w) {
  const StepRecord s = snapshot(w);
  nlohmann::ordered_json rec;
  rec["t"] = w.time;
  auto &uavs = rec["uavs"] = nlohmann::ordered_json::array();
  for (const auto &u : w.uavs) uavs.push_back({u.id, u.pos.x, u.pos.y, to_string(u.mode)});
  auto &fires = rec["fires"] = nlohmann::ordered_json::array();
  for (const auto &f : w.fires) fires.push_back({f.id, f.a, f.b, fire_state_name(f.state)});
  rec["F_d"] = s.fires_detected;
  rec["F_f"] = s.fires_under_mitigation;
  rec["F_r"] = s.fires_remaining;
  rec["S_s"] = s.swarms_searching;
  rec["S_q"] = s.swarms_quenching;
  rec["total_area"] = s.total_area;
  return rec;
}

nlohmann::ordered_json manifest(const ScenarioConfig &cfg, const std::string &command, int runs, int jobs) {
  nlohmann::ordered_json m;
  m["schema_version"] = kOutputSchemaVersion;
  m["tool"] = "swarmfire";
  m["version"] = SWARMFIRE_VERSION;
  m["command"] = command;
  m["base_seed"] = cfg.engine.base_seed;
  m["runs"] = runs;
  m["jobs"] = jobs;
  m["config"] = nlohmann::ordered_json::parse(write_config(cfg));
  return m;
}

nlohmann::ordered_json aggregate_json(const Aggregate &a) {
  nlohmann::ordered_json j;
  j["strategy"] = to_string(a.strategy);
  j["n_swarms"] = a.n_swarms;
  j["runs"] = a.runs;
  j["incomplete"] = a.incomplete;
  j["detection_time_s"] = stats_json(a.detection_time);
  j["mission_time_s"] = stats_json(a.mission_time);
  j["fer"] = stats_json(a.fer);
  j["objective"] = stats_json(a.objective);
  return j;
}

nlohmann::ordered_json comparison_json(const std::vector<StrategyRuns> &results) {
  nlohmann::ordered_json j;
  j["schema_version"] = kOutputSchemaVersion;
  auto &aggs = j["aggregates"] = nlohmann::ordered_json::array();
  for (const auto &r : results) aggs.push_back(aggregate_json(r.stats));
  auto &diffs = j["differences"] = nlohmann::ordered_json::array();
  for (std::size_t x = 0; x < results.size(); ++x) {
    for (std::size_t y = x + 1; y < results.size(); ++y) {
      const Aggregate &a = results[x].stats;
      const Aggregate &b = results[y].stats;
      diffs.push_back({{"a", to_string(a.strategy)},
                       {"b", to_string(b.strategy)},
                       {"detection_time_s", a.detection_time.mean - b.detection_time.mean},
                       {"mission_time_s", a.mission_time.mean - b.mission_time.mean},
                       {"fer", a.fer.mean - b.fer.mean},
                       {"objective", a.objective.mean - b.objective.mean}});
    }
  }
  return j;
}

void write_file(const std::filesystem::path &path, const std::string &text) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out.flush()) throw std::runtime_error("cannot write " + path.string());
}

}  // namespace swarmfire
