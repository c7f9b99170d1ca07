#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "swarmfire/geometry.hpp"

namespace swarmfire {

enum class Strategy { Mscidc, Uniform, Normal, Levy, Oms };

std::string_view to_string(Strategy s);
std::optional<Strategy> parse_strategy(std::string_view name);
/// Comma separated list of every accepted strategy name.
std::string strategy_names();

/// Which form of the angular sweep law the mitigation controller integrates.
enum class ControlForm {
  Corrected,  ///< theta' = mu*omega + K_m (theta - theta_r); tracks for either sweep direction
  Printed,    ///< theta' = omega + K_m (theta - theta_r); steady offset when mu = -1
};

struct FireSpec {
  Vec2 center;
  double a = 0.0;  ///< semi-major axis along x, m
  double b = 0.0;  ///< semi-minor axis along y, m
  friend bool operator==(const FireSpec &, const FireSpec &) = default;
};

struct FuelParams {
  double alpha = 259.833;             ///< kW m^(-1-beta)
  double beta = 2.174;
  double flame_length = 4.0;          ///< m
  double heat_of_combustion = 18600;  ///< kJ/kg
  double fuel_load = 4.0;             ///< kg/m^2
  friend bool operator==(const FuelParams &, const FuelParams &) = default;
};

struct QuenchParams {
  double c = 0.1;
  double nu = 1.0;
  double water_rate = 50.0;  ///< kg/s per UAV
  friend bool operator==(const QuenchParams &, const QuenchParams &) = default;
};

struct KinematicParams {
  double cruise_speed = 20.0;  ///< V0, m/s
  double pole = 1.0;           ///< lambda, 1/s
  double tau = 1.0;            ///< m
  friend bool operator==(const KinematicParams &, const KinematicParams &) = default;
};

struct SensingParams {
  double sensing_radius = 300.0;  ///< R_sen, m
  double sigma = 100.0;           ///< m
  double gamma = 0.9;             ///< detection threshold
  double gamma0 = 0.5;            ///< lower repulsion threshold
  double xi = 330.0;              ///< exploitation temperature threshold, K
  double sigma_t = 250.0;         ///< temperature field width, m
  double t_ambient = 300.0;       ///< K
  double t_fire = 1200.0;         ///< K
  double noise_std = 0.0;         ///< additive temperature noise, K (0 = off)
  friend bool operator==(const SensingParams &, const SensingParams &) = default;
};

struct SearchParams {
  double k_phi = kPi / 3.0;         ///< rad
  double k_e = 0.05;                ///< 1/K
  double levy_step = 500.0;         ///< m
  double brown_step = 50.0;         ///< m
  double levy_tail_exponent = 1.5;
  friend bool operator==(const SearchParams &, const SearchParams &) = default;
};

struct MitigationParams {
  double k_m = -1.0;           ///< 1/s
  double delta_theta = 0.05;   ///< rad
  double v_mit = 10.0;         ///< m/s
  double delta_area = 1.0e5;   ///< m^2
  int delta_fires = 2;
  int delta_swarms = 2;
  double repel_cooldown = 60.0;  ///< s
  ControlForm control_form = ControlForm::Corrected;
  friend bool operator==(const MitigationParams &, const MitigationParams &) = default;
};

struct ObjectiveParams {
  double w1 = 1.0;
  double w2 = 1.0;
  double w3 = 1.0;
  double q_tmax = 3600.0;  ///< s
  friend bool operator==(const ObjectiveParams &, const ObjectiveParams &) = default;
};

struct EngineParams {
  double dt = 0.5;          ///< s
  double t_max = 14400.0;   ///< s
  std::uint64_t base_seed = 1;
  Strategy strategy = Strategy::Mscidc;
  int trace_stride = 10;    ///< ticks between logged steps
  friend bool operator==(const EngineParams &, const EngineParams &) = default;
};

struct ScenarioConfig {
  Rect search_area{0.0, 0.0, 10000.0, 10000.0};
  std::vector<FireSpec> fires;
  std::vector<int> swarm_sizes{3, 2, 2, 2, 2, 2, 2};
  double swarm_radius = 250.0;  ///< r_s, m
  FuelParams fuel;
  QuenchParams quench;
  KinematicParams kinematics;
  SensingParams sensing;
  SearchParams search;
  MitigationParams mitigation;
  ObjectiveParams objective;
  EngineParams engine;

  int total_uavs() const;
  friend bool operator==(const ScenarioConfig &, const ScenarioConfig &) = default;
};

/// Raised for unreadable, malformed or invalid configurations. The message
/// always starts with the offending field path.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws ConfigError naming the first violated constraint.
void validate(const ScenarioConfig &cfg);

ScenarioConfig parse_config(std::string_view json_text);
ScenarioConfig load_config(const std::filesystem::path &path);
std::string write_config(const ScenarioConfig &cfg);

/// Built-in presets. "pine-table1" is the five-fire pine forest layout with
/// seven swarms; "pine-table1-s{3,5,6,7}" vary the swarm split of 15 UAVs.
std::optional<ScenarioConfig> preset(std::string_view name);
std::vector<std::string> preset_names();

/// Resolves a preset name or a path to a JSON file.
ScenarioConfig resolve_config(const std::string &name_or_path);

}  // namespace swarmfire
