#include "swarmfire/sensing.hpp"

#include <limits>

namespace swarmfire {

namespace {

// Beyond this many field widths the shoulder is below double resolution of
// any ambient temperature, so the exact distance is not needed.
constexpr double kNegligibleWidths = 12.0;

double shoulder(double dist, double sigma_t) { return std::exp(-dist * dist / (2.0 * sigma_t * sigma_t)); }

}  // namespace

double temperature_at(std::span<const FireFront> fires, Vec2 p, double t_ambient, double t_fire, double sigma_t) {
  double best = 0.0;
  for (const FireFront &f : fires) {
    if (!f.active()) continue;
    const double lower_bound = distance(p, f.center) - std::max(f.a, f.b);
    if (lower_bound > kNegligibleWidths * sigma_t) continue;
    best = std::max(best, shoulder(distance_to_front(f, p), sigma_t));
  }
  return t_ambient + (t_fire - t_ambient) * best;
}

double detection_probability(double dist, double sigma, double sensing_radius) {
  if (dist > sensing_radius) return 0.0;
  return std::exp(-dist * dist / (2.0 * sigma * sigma));
}

SensorReading sample(const UavState &uav, std::span<const FireFront> fires, const std::optional<SensorReading> &prev,
                     double time, double dt, const SensingParams &params, double temperature_noise) {
  SensorReading r;
  r.uav = uav.id;
  r.time = time;

  double best_shoulder = 0.0;
  double nearest = std::numeric_limits<double>::infinity();
  Vec2 nearest_point;
  for (const FireFront &f : fires) {
    if (!f.active()) continue;
    const double lower_bound = distance(uav.pos, f.center) - std::max(f.a, f.b);
    if (lower_bound > kNegligibleWidths * params.sigma_t && lower_bound > params.sensing_radius) continue;
    const FrontProjection proj = nearest_on_front(f, uav.pos);
    best_shoulder = std::max(best_shoulder, shoulder(proj.distance, params.sigma_t));
    if (proj.distance <= params.sensing_radius && proj.distance < nearest) {
      nearest = proj.distance;
      nearest_point = proj.point;
      r.candidate = f.id;
    }
  }
  r.temperature = params.t_ambient + (params.t_fire - params.t_ambient) * best_shoulder + temperature_noise;
  r.temperature_rate = prev ? (r.temperature - prev->temperature) / dt : 0.0;

  if (r.candidate >= 0) {
    r.candidate_distance = nearest;
    r.probability = detection_probability(nearest, params.sigma, params.sensing_radius);
    const Vec2 to_front = nearest_point - uav.pos;
    r.heading_to_fire = norm(to_front) > 0.0 ? bearing(to_front) : uav.last_heading;
    if (r.probability >= params.gamma) {
      for (const FireFront &f : fires) {
        if (f.id == r.candidate) r.detected = DetectedFire{f.id, f.center, f.a, f.b};
      }
    }
  }
  return r;
}

}  // namespace swarmfire
