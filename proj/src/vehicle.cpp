#include "swarmfire/vehicle.hpp"

namespace swarmfire {

std::string_view to_string(UavMode m) {
  switch (m) {
    case UavMode::Explore:
      return "explore";
    case UavMode::Exploit:
      return "exploit";
    case UavMode::Attracted:
      return "attracted";
    case UavMode::Align:
      return "align";
    case UavMode::Mitigate:
      return "mitigate";
    case UavMode::Repelled:
      return "repelled";
  }
  return "unknown";
}

Vec2 reference_velocity(Vec2 pos, Vec2 waypoint, Vec2 waypoint_vel, double cruise_speed, double tau) {
  const Vec2 err = waypoint - pos;
  return err * (cruise_speed / (tau + norm(err))) + waypoint_vel;
}

UavState step(UavState uav, Vec2 vel_ref, double pole, double dt) {
  const double decay = std::exp(-pole * dt);
  const Vec2 v_next = vel_ref + (uav.vel - vel_ref) * decay;
  uav.pos += (uav.vel + v_next) * (0.5 * dt);
  uav.vel = v_next;
  if (norm(v_next) > 1e-9) {
    uav.last_heading = bearing(v_next);
    uav.has_heading = true;
  }
  return uav;
}

double waypoint_radius(double cruise_speed, double dt) { return std::max(2.0 * cruise_speed * dt, 5.0); }

bool waypoint_reached(const UavState &uav, double cruise_speed, double dt) {
  return distance(uav.waypoint, uav.pos) < waypoint_radius(cruise_speed, dt);
}

}  // namespace swarmfire
