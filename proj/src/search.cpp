#include "swarmfire/search.hpp"

#include <algorithm>
#include <stdexcept>

namespace swarmfire {

void refresh(SwarmSearchState &swarm, std::span<const UavState> uavs) {
  Vec2 sum, vsum;
  for (int id : swarm.members) {
    sum += uavs[id].pos;
    vsum += uavs[id].vel;
  }
  const double n = static_cast<double>(swarm.members.size());
  swarm.center = sum / n;
  swarm.mean_velocity = vsum / n;
  swarm.max_temperature = 0.0;
  for (const auto &r : swarm.info) swarm.max_temperature = std::max(swarm.max_temperature, r.temperature);
  swarm.kstar = swarm.info.empty() ? swarm.members.front() : max_info_member(swarm.info);
}

int max_info_member(std::span<const SensorReading> info) {
  if (info.empty()) throw std::invalid_argument("max_info_member: no readings");
  const SensorReading *best = &info.front();
  for (const auto &r : info) {
    if (r.temperature_rate > best->temperature_rate ||
        (r.temperature_rate == best->temperature_rate && r.uav < best->uav)) {
      best = &r;
    }
  }
  return best->uav;
}

double search_cone_halfwidth(double max_temperature, double k_phi, double k_e) {
  return k_phi / (1.0 + std::exp(-k_e * max_temperature));
}

double sample_heading(double phi_kstar, double phi0, RngStream &rng) {
  if (phi0 <= 0.0) return wrap_angle(phi_kstar);
  return wrap_angle(rng.uniform(phi_kstar - phi0, phi_kstar + phi0));
}

double levy_length(RngStream &rng, double tail_exponent, double max) {
  // Inverse CDF of the Pareto(1, exponent) law conditioned on l <= max.
  const double tail_mass = 1.0 - std::pow(max, -tail_exponent);
  const double u = rng.uniform01();
  return std::pow(1.0 - u * tail_mass, -1.0 / tail_exponent);
}

double sample_step_length(SearchMode mode, RngStream &rng, const SearchParams &params, double levy_max) {
  if (mode == SearchMode::Exploit) return std::abs(rng.normal());
  return levy_length(rng, params.levy_tail_exponent, levy_max);
}

Vec2 next_waypoint(Vec2 p_kstar, double psi, double step, double l, const Rect &area, Vec2 predicted_center,
                   double swarm_radius) {
  const Vec2 raw = area.clamp(p_kstar + unit_from_angle(psi) * (step * l));
  // The disk center is inside the (convex) area, so the projection stays in it.
  return area.clamp(project_to_disk(raw, area.clamp(predicted_center), swarm_radius));
}

SearchMode select_mode(double max_temperature, double xi) {
  return max_temperature < xi ? SearchMode::Explore : SearchMode::Exploit;
}

std::vector<WaypointOverride> local_attraction(SwarmSearchState &swarm, std::span<const UavState> uavs,
                                               double swarm_radius, int detector,
                                               std::span<const Vec2> alignment_points) {
  std::vector<WaypointOverride> out;
  if (detector >= 0) {
    if (alignment_points.size() != swarm.members.size())
      throw std::invalid_argument("local_attraction: one alignment point per member required");
    for (std::size_t i = 0; i < swarm.members.size(); ++i) {
      const int id = swarm.members[i];
      out.push_back({id, alignment_points[i], id == detector ? UavMode::Align : UavMode::Attracted});
    }
    swarm.mode = SearchMode::Locked;
    return out;
  }
  for (int id : swarm.members) {
    if (distance(uavs[id].pos, swarm.center) > swarm_radius) out.push_back({id, swarm.center, UavMode::Attracted});
  }
  return out;
}

Vec2 baseline_waypoint(Strategy strategy, const UavState &uav, const SensorReading &reading, RngStream &rng,
                       const Rect &area, const ScenarioConfig &cfg) {
  const SearchParams &sp = cfg.search;
  const double levy_max = area.diagonal() / sp.levy_step;
  switch (strategy) {
    case Strategy::Uniform:
      return {rng.uniform(area.x_min, area.x_max), rng.uniform(area.y_min, area.y_max)};
    case Strategy::Normal: {
      const double heading = rng.uniform(-kPi, kPi);
      const double l = std::abs(rng.normal());
      return area.clamp(uav.pos + unit_from_angle(heading) * (sp.brown_step * l));
    }
    case Strategy::Levy: {
      const double heading = rng.uniform(-kPi, kPi);
      const double l = levy_length(rng, sp.levy_tail_exponent, levy_max);
      return area.clamp(uav.pos + unit_from_angle(heading) * (sp.levy_step * l));
    }
    case Strategy::Oms: {
      double center = uav.has_heading ? uav.last_heading : rng.uniform(-kPi, kPi);
      if (reading.temperature_rate < 0.0) center += kPi;
      if (reading.temperature < cfg.sensing.xi) {
        const double heading = sample_heading(center, kPi / 2.0, rng);
        const double l = levy_length(rng, sp.levy_tail_exponent, levy_max);
        return area.clamp(uav.pos + unit_from_angle(heading) * (sp.levy_step * l));
      }
      const double heading = sample_heading(center, kPi / 4.0, rng);
      const double l = std::abs(rng.normal());
      return area.clamp(uav.pos + unit_from_angle(heading) * (sp.brown_step * l));
    }
    case Strategy::Mscidc:
      break;
  }
  throw std::invalid_argument("baseline_waypoint: MSCIDC is not a baseline strategy");
}

}  // namespace swarmfire
