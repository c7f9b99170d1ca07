#pragma once

#include <optional>
#include <string_view>

#include "swarmfire/geometry.hpp"

namespace swarmfire {

enum class UavMode { Explore, Exploit, Attracted, Align, Mitigate, Repelled };

std::string_view to_string(UavMode m);

/// Sector a mitigating UAV sweeps. Angles are parametric ellipse angles, so
/// equal-area sectors have equal spans.
struct SectorAssignment {
  int fire = -1;
  int sector = 0;
  double lo = 0.0;
  double hi = kTwoPi;
  double theta = 0.0;      ///< current angular position
  double theta_ref = 0.0;  ///< reference angular position
  int mu = 1;              ///< sweep direction, +1 or -1
};

struct UavState {
  int id = 0;
  int swarm = 0;
  Vec2 pos;
  Vec2 vel;
  UavMode mode = UavMode::Explore;
  Vec2 waypoint;
  Vec2 waypoint_vel;
  std::optional<SectorAssignment> sector;
  double last_heading = 0.0;  ///< direction of the last non-zero velocity
  bool has_heading = false;
};

/// Position-to-velocity reference feedback:
/// V0 (p_r - p) / (tau + |p_r - p|) + p_r'.
Vec2 reference_velocity(Vec2 pos, Vec2 waypoint, Vec2 waypoint_vel, double cruise_speed, double tau);

/// Advances a first-order velocity lag by dt using the exact exponential
/// solution; position integrates the velocity with the trapezoidal rule.
UavState step(UavState uav, Vec2 vel_ref, double pole, double dt);

/// Radius within which a waypoint counts as reached: max(2 V0 dt, 5 m).
double waypoint_radius(double cruise_speed, double dt);
bool waypoint_reached(const UavState &uav, double cruise_speed, double dt);

}  // namespace swarmfire
