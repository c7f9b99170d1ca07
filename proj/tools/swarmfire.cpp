#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "swarmfire/engine.hpp"
#include "swarmfire/montecarlo.hpp"
#include "swarmfire/output.hpp"
#include "swarmfire/scenario.hpp"

namespace fs = std::filesystem;
using namespace swarmfire;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitConfig = 3;
constexpr int kExitIo = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ScenarioConfig load(const std::string &name, std::optional<std::uint64_t> seed_flag) {
  if (!preset(name) && !fs::exists(name)) throw UsageError("config not found: " + name);
  ScenarioConfig cfg = resolve_config(name);
  if (const char *env = std::getenv("SWARMFIRE_SEED"); env && *env) {
    try {
      std::size_t used = 0;
      cfg.engine.base_seed = std::stoull(env, &used);
      if (env[used] != '\0') throw std::invalid_argument(env);
    } catch (const std::exception &) {
      throw UsageError(std::string("SWARMFIRE_SEED is not an unsigned integer: ") + env);
    }
  }
  if (seed_flag) cfg.engine.base_seed = *seed_flag;
  return cfg;
}

void write(const fs::path &path, const std::string &text) {
  try {
    write_file(path, text);
  } catch (const std::exception &e) {
    throw IoError(e.what());
  }
}

std::string csv_text(const std::vector<RunSummary> &runs) {
  std::ostringstream os;
  write_summary_csv(os, runs);
  return os.str();
}

void print_aggregate(const Aggregate &a) {
  std::printf("%-8s swarms=%d runs=%d incomplete=%d  detection %.1f min  mission %.1f min  FER %.3f\n",
              std::string(to_string(a.strategy)).c_str(), a.n_swarms, a.runs, a.incomplete,
              a.detection_time.mean / 60.0, a.mission_time.mean / 60.0, a.fer.mean);
}

std::vector<Strategy> parse_strategy_list(const std::string &list) {
  std::vector<Strategy> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto s = parse_strategy(item);
    if (!s) throw UsageError("unknown strategy '" + item + "' (valid: " + strategy_names() + ")");
    out.push_back(*s);
  }
  if (out.empty()) throw UsageError("no strategies given (valid: " + strategy_names() + ")");
  return out;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Multi-swarm UAV forest fire search and mitigation simulator"};
  app.set_version_flag("--version", SWARMFIRE_VERSION);
  app.require_subcommand(1);

  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out_dir;
  std::string trace_path;
  std::uint64_t run_index = 0;
  int runs = 100;
  int jobs = 0;
  std::string strategies = "MSCIDC,UNIFORM,NORMAL,LEVY,OMS";

  auto *run_cmd = app.add_subcommand("run", "Run one mission and print its metrics");
  run_cmd->add_option("config", config, "Preset name or JSON config path")->required();
  run_cmd->add_option("--seed", seed, "Base seed (overrides config and SWARMFIRE_SEED)");
  run_cmd->add_option("--run-index", run_index, "Run index within the seeded batch");
  run_cmd->add_option("--trace", trace_path, "Write a JSONL step trace to this file");
  run_cmd->add_option("--out", out_dir, "Directory for summary.csv and manifest.json");

  auto *mc_cmd = app.add_subcommand("mc", "Monte-Carlo batch of seeded runs");
  mc_cmd->add_option("config", config, "Preset name or JSON config path")->required();
  mc_cmd->add_option("--runs", runs, "Number of runs")->check(CLI::Range(1, 1000000));
  mc_cmd->add_option("--jobs", jobs, "Worker threads (0 = all)")->check(CLI::NonNegativeNumber);
  mc_cmd->add_option("--seed", seed, "Base seed (overrides config and SWARMFIRE_SEED)");
  mc_cmd->add_option("--out", out_dir, "Directory for summary.csv, aggregate.json, manifest.json");

  auto *cmp_cmd = app.add_subcommand("compare", "Paired-seed comparison of search strategies");
  cmp_cmd->add_option("config", config, "Preset name or JSON config path")->required();
  cmp_cmd->add_option("--strategies", strategies, "Comma-separated strategy names");
  cmp_cmd->add_option("--runs", runs, "Runs per strategy")->check(CLI::Range(1, 1000000));
  cmp_cmd->add_option("--jobs", jobs, "Worker threads (0 = all)")->check(CLI::NonNegativeNumber);
  cmp_cmd->add_option("--seed", seed, "Base seed (overrides config and SWARMFIRE_SEED)");
  cmp_cmd->add_option("--out", out_dir, "Directory for summary.csv, comparison.json, manifest.json");

  std::string preset_name;
  auto *cfg_cmd = app.add_subcommand("config", "Print a preset or config file as JSON");
  cfg_cmd->add_option("config", preset_name, "Preset name or JSON config path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*cfg_cmd) {
      if (preset_name.empty()) {
        for (const auto &n : preset_names()) std::cout << n << '\n';
        return 0;
      }
      std::cout << write_config(load(preset_name, seed)) << '\n';
      return 0;
    }

    if (*run_cmd) {
      const ScenarioConfig cfg = load(config, seed);
      std::ofstream trace;
      if (!trace_path.empty()) {
        const fs::path p(trace_path);
        std::error_code ec;
        if (p.has_parent_path()) fs::create_directories(p.parent_path(), ec);
        trace.open(p, std::ios::binary);
        if (!trace) throw IoError("cannot write " + trace_path);
      }
      StepObserver observer;
      if (trace.is_open()) observer = [&](const WorldState &w) { trace << trace_record(w).dump() << '\n'; };
      const RunResult r = run(cfg, run_index, {}, observer);
      if (trace.is_open() && !trace.flush()) throw IoError("cannot write " + trace_path);

      std::printf("strategy        %s\n", std::string(to_string(r.strategy)).c_str());
      std::printf("seed            %llu (run %llu)\n", static_cast<unsigned long long>(cfg.engine.base_seed),
                  static_cast<unsigned long long>(r.run_index));
      std::printf("complete        %s\n", r.complete ? "yes" : "no (t_max reached)");
      std::printf("detection time  %.1f s\n", r.detection_time);
      std::printf("mission time    %.1f s\n", r.mission_time);
      std::printf("FER             %.4f\n", r.fer);
      std::printf("objective       %.6g (%d quench-time violations)\n", r.objective, r.quench_violations);
      for (const auto &f : r.fires) {
        std::printf("  fire %d: detected %s extinguished %s\n", f.id,
                    f.detected ? format_number(f.detection_time).c_str() : "-",
                    f.extinguished ? format_number(f.extinction_time).c_str() : "-");
      }
      if (!out_dir.empty()) {
        write(fs::path(out_dir) / "summary.csv", csv_text({summarize(r)}));
        nlohmann::ordered_json m = manifest(cfg, "run", 1, 1);
        m["run_index"] = run_index;
        write(fs::path(out_dir) / "manifest.json", m.dump(2) + "\n");
      }
      return 0;
    }

    if (*mc_cmd) {
      const ScenarioConfig cfg = load(config, seed);
      const auto results = monte_carlo(cfg, runs, jobs);
      const Aggregate agg = aggregate(results);
      if (out_dir.empty()) {
        std::cout << csv_text(results);
      } else {
        write(fs::path(out_dir) / "summary.csv", csv_text(results));
        nlohmann::ordered_json aj = aggregate_json(agg);
        aj["schema_version"] = kOutputSchemaVersion;
        write(fs::path(out_dir) / "aggregate.json", aj.dump(2) + "\n");
        write(fs::path(out_dir) / "manifest.json", manifest(cfg, "mc", runs, jobs).dump(2) + "\n");
        print_aggregate(agg);
      }
      return 0;
    }

    if (*cmp_cmd) {
      const std::vector<Strategy> list = parse_strategy_list(strategies);
      const ScenarioConfig cfg = load(config, seed);
      const auto results = compare(cfg, list, runs, jobs);
      for (const auto &r : results) print_aggregate(r.stats);
      const nlohmann::ordered_json cj = comparison_json(results);
      for (const auto &d : cj["differences"]) {
        std::printf("%s - %s: mission %+.1f min  FER %+.3f\n", d["a"].get<std::string>().c_str(),
                    d["b"].get<std::string>().c_str(), d["mission_time_s"].get<double>() / 60.0,
                    d["fer"].get<double>());
      }
      if (!out_dir.empty()) {
        std::vector<RunSummary> all;
        for (const auto &r : results) all.insert(all.end(), r.runs.begin(), r.runs.end());
        write(fs::path(out_dir) / "summary.csv", csv_text(all));
        write(fs::path(out_dir) / "comparison.json", cj.dump(2) + "\n");
        write(fs::path(out_dir) / "manifest.json", manifest(cfg, "compare", runs, jobs).dump(2) + "\n");
      }
      return 0;
    }
  } catch (const UsageError &e) {
    std::fprintf(stderr, "swarmfire: %s\n", e.what());
    return kExitUsage;
  } catch (const ConfigError &e) {
    std::fprintf(stderr, "swarmfire: invalid config: %s\n", e.what());
    return kExitConfig;
  } catch (const IoError &e) {
    std::fprintf(stderr, "swarmfire: %s\n", e.what());
    return kExitIo;
  }
  return 0;
}
