#pragma once

#include <span>
#include <vector>

#include "swarmfire/firemodel.hpp"
#include "swarmfire/scenario.hpp"
#include "swarmfire/vehicle.hpp"

namespace swarmfire {

struct MitigatorEntry {
  int uav = -1;
  int swarm = -1;
  bool joined = false;     ///< reached the front; counts toward the quench rate
  double join_time = 0.0;  ///< T_m
  bool pending = false;    ///< merged in, waiting for the next repartition
  SectorAssignment sector;
};

struct FireMitigationRecord {
  int fire = -1;
  std::vector<MitigatorEntry> members;
  std::vector<int> swarms;     ///< swarm ids quenching this fire
  std::vector<double> bounds;  ///< polar sector boundaries, size N_qu + 1

  int n_qu() const { return static_cast<int>(members.size()); }
  int n_qs() const { return static_cast<int>(swarms.size()); }
  int n_active() const;
  bool has_pending() const;
  MitigatorEntry *find(int uav);
};

struct MemberPosition {
  int uav = -1;
  int swarm = -1;
  Vec2 pos;
};

/// Quench area rate r_q = W_r / CF with critical flow CF = c L_f^nu, m^2/s.
double quench_area_rate(double water_rate, double c, double nu, double flame_length);

/// Time to quench area A_f with N UAVs joining together: A_f / (N r_q).
double closed_form_quench_time(double fire_area, int n_uavs, double quench_rate);

/// Splits the fire into one equal-area sector per member. Members are
/// ordered by angular position about the fire center (ties by UAV id) and
/// handed consecutive sectors, rotated to minimize total angular travel.
/// Each starts at its sector midpoint with mu = +1. Throws on an empty list.
FireMitigationRecord assign_sectors(const FireFront &fire, std::span<const MemberPosition> members);

/// Redoes the partition for the current membership. Joined members keep
/// their join time and current angular position.
void repartition(FireMitigationRecord &rec, const FireFront &fire, std::span<const UavState> uavs);

/// One dt of the sweep controller for a UAV in sector [lo, hi]. The sweep
/// direction reverses within delta_theta of either edge; the reference angle
/// integrates mu * omega and the position tracks it at rate K_m.
SectorAssignment angular_control(SectorAssignment s, double omega, double k_m, double delta_theta, double dt,
                                 ControlForm form = ControlForm::Corrected);

/// Angular rate that moves the front point at ground speed v_mit.
double nominal_angular_velocity(const FireFront &fire, double v_mit, double theta);

/// Regulative merging: (A_f > delta_A or F_r < delta_f) and N_qs < delta_s.
bool merging_decision(double fire_area, int fires_remaining, int n_qs, double delta_area, int delta_fires,
                      int delta_swarms);

/// Regulative repulsion: a busy fire sensed by another swarm with
/// gamma0 < P < gamma when merging was refused.
bool repulsion_decision(double probability, double gamma0, double gamma, bool fire_under_mitigation,
                        bool same_swarm, bool merge);

/// Heading opposite to the maximum information direction, in (-pi, pi].
double repulsion_heading(double phi_max_info);

}  // namespace swarmfire
