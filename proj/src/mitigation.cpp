#include "swarmfire/mitigation.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace swarmfire {

namespace {

double circular_gap(double x, double y) {
  const double d = std::fmod(std::abs(x - y), kTwoPi);
  return std::min(d, kTwoPi - d);
}

}  // namespace

int FireMitigationRecord::n_active() const {
  return static_cast<int>(std::count_if(members.begin(), members.end(), [](const auto &m) { return m.joined; }));
}

bool FireMitigationRecord::has_pending() const {
  return std::any_of(members.begin(), members.end(), [](const auto &m) { return m.pending; });
}

MitigatorEntry *FireMitigationRecord::find(int uav) {
  for (auto &m : members) {
    if (m.uav == uav) return &m;
  }
  return nullptr;
}

double quench_area_rate(double water_rate, double c, double nu, double flame_length) {
  return water_rate / (c * std::pow(flame_length, nu));
}

double closed_form_quench_time(double fire_area, int n_uavs, double quench_rate) {
  return fire_area / (n_uavs * quench_rate);
}

FireMitigationRecord assign_sectors(const FireFront &fire, std::span<const MemberPosition> members) {
  if (members.empty()) throw std::invalid_argument("assign_sectors: no members");
  const int n = static_cast<int>(members.size());

  struct Polar {
    MemberPosition m;
    double angle;
  };
  std::vector<Polar> order;
  for (const auto &m : members) order.push_back({m, parametric_angle_of(fire, m.pos)});
  std::sort(order.begin(), order.end(), [](const Polar &x, const Polar &y) {
    return x.angle != y.angle ? x.angle < y.angle : x.m.uav < y.m.uav;
  });

  const double span = kTwoPi / n;
  auto midpoint = [&](int sector) { return (sector + 0.5) * span; };

  int best_shift = 0;
  double best_cost = std::numeric_limits<double>::infinity();
  for (int shift = 0; shift < n; ++shift) {
    double cost = 0.0;
    for (int i = 0; i < n; ++i) cost += circular_gap(order[i].angle, midpoint((i + shift) % n));
    if (cost < best_cost - 1e-12) {
      best_cost = cost;
      best_shift = shift;
    }
  }

  FireMitigationRecord rec;
  rec.fire = fire.id;
  rec.bounds = partition_sectors(fire, n);
  for (int i = 0; i < n; ++i) {
    const int sector = (i + best_shift) % n;
    MitigatorEntry e;
    e.uav = order[i].m.uav;
    e.swarm = order[i].m.swarm;
    e.sector.fire = fire.id;
    e.sector.sector = sector;
    e.sector.lo = sector * span;
    e.sector.hi = (sector + 1) * span;
    e.sector.theta_ref = midpoint(sector);
    e.sector.theta = e.sector.theta_ref;
    e.sector.mu = 1;
    rec.members.push_back(e);
  }
  std::sort(rec.members.begin(), rec.members.end(),
            [](const MitigatorEntry &x, const MitigatorEntry &y) { return x.sector.sector < y.sector.sector; });
  for (const auto &m : members) rec.swarms.push_back(m.swarm);
  std::sort(rec.swarms.begin(), rec.swarms.end());
  rec.swarms.erase(std::unique(rec.swarms.begin(), rec.swarms.end()), rec.swarms.end());
  return rec;
}

void repartition(FireMitigationRecord &rec, const FireFront &fire, std::span<const UavState> uavs) {
  std::vector<MemberPosition> positions;
  for (const auto &m : rec.members) positions.push_back({m.uav, m.swarm, uavs[m.uav].pos});
  FireMitigationRecord fresh = assign_sectors(fire, positions);
  for (auto &e : fresh.members) {
    const MitigatorEntry *old = rec.find(e.uav);
    e.joined = old->joined;
    e.join_time = old->join_time;
    e.pending = false;
    if (!e.joined) continue;
    // Start from where the UAV is, unwrapped next to its new sector.
    const double mid = 0.5 * (e.sector.lo + e.sector.hi);
    double theta = parametric_angle_of(fire, uavs[e.uav].pos);
    theta += kTwoPi * std::round((mid - theta) / kTwoPi);
    e.sector.theta = theta;
    e.sector.theta_ref = std::clamp(theta, e.sector.lo, e.sector.hi);
  }
  // Keep the swarm list; it records merge order, not membership.
  fresh.swarms = rec.swarms;
  rec = std::move(fresh);
}

SectorAssignment angular_control(SectorAssignment s, double omega, double k_m, double delta_theta, double dt,
                                 ControlForm form) {
  if (s.mu > 0 && s.hi - s.theta_ref < delta_theta) {
    s.mu = -1;
  } else if (s.mu < 0 && s.theta_ref - s.lo < delta_theta) {
    s.mu = 1;
  }
  const double decay = std::exp(k_m * dt);
  double err = s.theta - s.theta_ref;
  if (form == ControlForm::Corrected) {
    err *= decay;
  } else {
    // Printed law: e' = (1 - mu) omega + K_m e, which settles at -(1 - mu) omega / K_m.
    const double steady = -(1.0 - s.mu) * omega / k_m;
    err = steady + (err - steady) * decay;
  }
  s.theta_ref = std::clamp(s.theta_ref + s.mu * omega * dt, s.lo - delta_theta, s.hi + delta_theta);
  s.theta = s.theta_ref + err;
  return s;
}

double nominal_angular_velocity(const FireFront &fire, double v_mit, double theta) {
  const double r_local = std::hypot(fire.a * std::sin(theta), fire.b * std::cos(theta));
  return v_mit / std::max(r_local, 1.0);
}

bool merging_decision(double fire_area, int fires_remaining, int n_qs, double delta_area, int delta_fires,
                      int delta_swarms) {
  return (fire_area > delta_area || fires_remaining < delta_fires) && n_qs < delta_swarms;
}

bool repulsion_decision(double probability, double gamma0, double gamma, bool fire_under_mitigation,
                        bool same_swarm, bool merge) {
  return fire_under_mitigation && !same_swarm && gamma0 < probability && probability < gamma && !merge;
}

double repulsion_heading(double phi_max_info) { return wrap_angle(phi_max_info + kPi); }

}  // namespace swarmfire
