#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "swarmfire/firemodel.hpp"
#include "swarmfire/mitigation.hpp"
#include "swarmfire/rng.hpp"
#include "swarmfire/scenario.hpp"
#include "swarmfire/search.hpp"
#include "swarmfire/sensing.hpp"
#include "swarmfire/vehicle.hpp"

namespace swarmfire {

enum class EventKind { Detection, Join, Merge, Repulsion, Repartition, Extinction };

std::string_view to_string(EventKind k);

struct Event {
  double time = 0.0;
  EventKind kind = EventKind::Detection;
  int fire = -1;
  int swarm = -1;
  int uav = -1;
};

/// Bookkeeping counters at one logged step.
struct StepRecord {
  double time = 0.0;
  int fires_detected = 0;          ///< F_d
  int fires_under_mitigation = 0;  ///< F_f
  int fires_extinguished = 0;
  int fires_remaining = 0;         ///< F_r
  int swarms_searching = 0;        ///< S_s
  int swarms_quenching = 0;        ///< S_q
  int live_swarms = 0;
  int max_swarms_on_fire = 0;      ///< max over fires of N_qs
  double total_area = 0.0;         ///< sum of active fire areas, m^2
};

struct FireOutcome {
  int id = 0;
  bool detected = false;
  double detection_time = 0.0;
  double area_at_detection = 0.0;
  bool extinguished = false;
  double extinction_time = 0.0;
  double quench_time = 0.0;  ///< extinction (or run end) minus detection
  double final_area = 0.0;
  bool quench_violation = false;
};

struct RunResult {
  std::uint64_t run_index = 0;
  Strategy strategy = Strategy::Mscidc;
  int n_swarms = 0;
  bool complete = false;         ///< every fire extinguished before t_max
  double detection_time = 0.0;   ///< last fire detected (run end if some never were)
  double mission_time = 0.0;     ///< last fire extinguished (run end if incomplete)
  double fer = 0.0;
  double objective = 0.0;
  int quench_violations = 0;
  double initial_area = 0.0;
  double peak_area = 0.0;
  double end_time = 0.0;
  std::vector<FireOutcome> fires;
  std::vector<StepRecord> series;  ///< every trace_stride ticks, when requested
  std::vector<Event> events;
};

struct WorldState {
  double time = 0.0;
  long ticks = 0;
  Strategy strategy = Strategy::Mscidc;
  bool regulated = true;     ///< merging cap and repulsion between swarms
  double quench_rate = 0.0;  ///< r_q, m^2/s per joined UAV
  double levy_max = 1.0;

  std::vector<FireFront> fires;
  std::vector<UavState> uavs;  ///< index == id
  std::vector<SwarmSearchState> swarms;
  std::vector<std::optional<FireMitigationRecord>> records;  ///< per fire
  std::vector<std::optional<SensorReading>> readings;        ///< latest per UAV
  std::vector<char> new_leg;                                 ///< per swarm
  std::vector<Event> events;

  std::vector<RngStream> swarm_rngs;
  std::vector<RngStream> uav_rngs;
  RngStream noise_rng{0, 0};

  std::vector<double> detection_time;  ///< per fire, < 0 until detected
  std::vector<double> area_at_detection;
  std::vector<double> extinction_time;  ///< per fire, < 0 while active
  double initial_area = 0.0;
  double peak_area = 0.0;
};

/// Builds the world of one run: fires from the config, swarm centers drawn
/// uniformly in the area and members uniformly within the swarm radius. For
/// baseline strategies every UAV becomes a swarm of one but starts from the
/// same positions as under MSCIDC.
WorldState init_world(const ScenarioConfig &cfg, std::uint64_t run_index);

/// Advances the world by one dt: growth, sensing, per-swarm search and
/// detection, mitigation coordination, kinematics, quenching.
void tick(WorldState &world, const ScenarioConfig &cfg);

StepRecord snapshot(const WorldState &world);

struct RunOptions {
  bool record_series = false;
  bool record_events = true;
};

using StepObserver = std::function<void(const WorldState &)>;

/// Ticks `world` until every fire is out or t_max is reached. The observer,
/// if set, sees the world every trace_stride ticks, starting at t = 0, and
/// once more at the end if the last tick fell between strides.
RunResult run_world(WorldState world, const ScenarioConfig &cfg, std::uint64_t run_index,
                    const RunOptions &options = {}, const StepObserver &observer = {});

RunResult run(const ScenarioConfig &cfg, std::uint64_t run_index, const RunOptions &options = {},
              const StepObserver &observer = {});

struct ObjectiveValue {
  double value = 0.0;
  int violations = 0;  ///< detected fires whose quench time reached q_tmax
};

/// w1 * (areas of detected fires at detection) + w2 * (areas of undetected
/// fires at the end) + w3 * (quench times of detected fires). The quench
/// time bound is reported, not enforced.
ObjectiveValue weighted_objective(const RunResult &result, double w1, double w2, double w3, double q_tmax);

/// Human-readable descriptions of every violated bookkeeping invariant.
std::vector<std::string> bookkeeping_violations(const RunResult &result, const ScenarioConfig &cfg);

}  // namespace swarmfire
