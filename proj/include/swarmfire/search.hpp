#pragma once

#include <span>
#include <vector>

#include "swarmfire/rng.hpp"
#include "swarmfire/scenario.hpp"
#include "swarmfire/sensing.hpp"
#include "swarmfire/vehicle.hpp"

namespace swarmfire {

enum class SearchMode { Explore, Exploit, Locked };

struct SwarmSearchState {
  int id = 0;
  std::vector<int> members;             ///< UAV ids, ascending
  Vec2 center;                          ///< mean member position
  Vec2 mean_velocity;
  std::vector<SensorReading> info;      ///< latest reading per member, same order as members
  int kstar = -1;                       ///< UAV id with the largest temperature rate
  double max_temperature = 0.0;         ///< T_s, K
  SearchMode mode = SearchMode::Explore;
  int target_fire = -1;                 ///< fire being approached or quenched when Locked
  double repel_until = -1.0;            ///< end of the current repulsion cooldown, s
  double repel_heading = 0.0;
};

/// Recomputes center, mean velocity, T_s and k* from member states and the
/// pooled readings.
void refresh(SwarmSearchState &swarm, std::span<const UavState> uavs);

/// Member with the largest temperature rate; ties go to the lowest UAV id.
int max_info_member(std::span<const SensorReading> info);

/// Half-width of the heading cone: K_phi / (1 + exp(-K_e T_s)).
double search_cone_halfwidth(double max_temperature, double k_phi, double k_e);

/// Uniform heading on [phi - phi0, phi + phi0], wrapped to (-pi, pi].
double sample_heading(double phi_kstar, double phi0, RngStream &rng);

/// Truncated Pareto draw on [1, max] with P(l > x) ~ x^-exponent.
double levy_length(RngStream &rng, double tail_exponent, double max);

/// Dimensionless leg length: a truncated Levy draw for exploration, |N(0,1)|
/// for exploitation. `levy_max` is the truncation point (diag(area)/levy_step).
double sample_step_length(SearchMode mode, RngStream &rng, const SearchParams &params, double levy_max);

/// p_kstar + step * l * (cos psi, sin psi), clamped into the area and then
/// projected onto the disk of radius `swarm_radius` about `predicted_center`.
Vec2 next_waypoint(Vec2 p_kstar, double psi, double step, double l, const Rect &area, Vec2 predicted_center,
                   double swarm_radius);

/// Exploration below the temperature threshold, exploitation at or above it.
SearchMode select_mode(double max_temperature, double xi);

struct WaypointOverride {
  int uav = -1;
  Vec2 waypoint;
  UavMode mode = UavMode::Attracted;
};

/// Intra-swarm attraction. Members outside the swarm disk are sent to the
/// center. When `detector` is a member id, every other member is sent to its
/// entry in `alignment_points` (same order as swarm.members) and the swarm
/// becomes Locked.
std::vector<WaypointOverride> local_attraction(SwarmSearchState &swarm, std::span<const UavState> uavs,
                                               double swarm_radius, int detector = -1,
                                               std::span<const Vec2> alignment_points = {});

/// Independent per-UAV waypoint generators used by the comparison baselines.
/// OMS is an approximation: Levy legs below xi and Brownian legs above it,
/// both biased toward the direction in which temperature last rose.
Vec2 baseline_waypoint(Strategy strategy, const UavState &uav, const SensorReading &reading, RngStream &rng,
                       const Rect &area, const ScenarioConfig &cfg);

}  // namespace swarmfire
