#include "swarmfire/engine.hpp"

#include <algorithm>
#include <sstream>

namespace swarmfire {

namespace {

constexpr std::uint64_t kWorldStream = 0;
constexpr std::uint64_t kNoiseStream = 1;
constexpr std::uint64_t kSwarmStreamBase = 1'000;
constexpr std::uint64_t kUavStreamBase = 1'000'000;

void log_event(WorldState &w, EventKind kind, int fire, int swarm, int uav) {
  w.events.push_back({w.time, kind, fire, swarm, uav});
}

int fires_remaining(const WorldState &w) {
  return static_cast<int>(std::count_if(w.fires.begin(), w.fires.end(), [](const auto &f) { return f.active(); }));
}

void mark_detected(WorldState &w, int fire, int swarm, int uav) {
  if (w.detection_time[fire] >= 0.0) return;
  w.detection_time[fire] = w.time;
  w.area_at_detection[fire] = area(w.fires[fire]);
  log_event(w, EventKind::Detection, fire, swarm, uav);
}

/// The swarm commits to an unattended fire. Every member gets an
/// equal-area sector; the detector aligns, the rest are attracted.
void lock_on_new_fire(WorldState &w, const ScenarioConfig &cfg, SwarmSearchState &swarm, int fire_id, int detector) {
  FireFront &fire = w.fires[fire_id];
  mark_detected(w, fire_id, swarm.id, detector);
  fire.state = FireState::UnderMitigation;

  std::vector<MemberPosition> positions;
  for (int id : swarm.members) positions.push_back({id, swarm.id, w.uavs[id].pos});
  FireMitigationRecord rec = assign_sectors(fire, positions);

  std::vector<Vec2> alignment;
  for (int id : swarm.members) alignment.push_back(point_on_front(fire, rec.find(id)->sector.theta_ref));
  for (const auto &o : local_attraction(swarm, w.uavs, cfg.swarm_radius, detector, alignment)) {
    UavState &u = w.uavs[o.uav];
    u.waypoint = o.waypoint;
    u.waypoint_vel = {};
    u.mode = o.mode;
    u.sector = rec.find(o.uav)->sector;
  }
  swarm.target_fire = fire_id;
  w.records[fire_id] = std::move(rec);
}

/// A swarm joins a fire another swarm is already quenching. Arrivals fly to
/// the nearest part of the front; sectors are redrawn once all have arrived.
void merge_into(WorldState &w, SwarmSearchState &swarm, int fire_id, int sensing_uav) {
  FireFront &fire = w.fires[fire_id];
  FireMitigationRecord &rec = *w.records[fire_id];
  rec.swarms.push_back(swarm.id);
  for (int id : swarm.members) {
    MitigatorEntry e;
    e.uav = id;
    e.swarm = swarm.id;
    e.pending = true;
    e.sector.fire = fire_id;
    e.sector.theta = parametric_angle_of(fire, w.uavs[id].pos);
    e.sector.theta_ref = e.sector.theta;
    rec.members.push_back(e);
    UavState &u = w.uavs[id];
    u.mode = UavMode::Attracted;
    u.waypoint = point_on_front(fire, e.sector.theta);
    u.waypoint_vel = {};
    u.sector = e.sector;
  }
  swarm.mode = SearchMode::Locked;
  swarm.target_fire = fire_id;
  log_event(w, EventKind::Merge, fire_id, swarm.id, sensing_uav);
}

double info_direction(const WorldState &w, const SwarmSearchState &swarm, RngStream &rng) {
  const UavState &k = w.uavs[swarm.kstar];
  return k.has_heading ? k.last_heading : rng.uniform(-kPi, kPi);
}

void repel(WorldState &w, const ScenarioConfig &cfg, SwarmSearchState &swarm, int fire_id, int sensing_uav) {
  const double phi = info_direction(w, swarm, w.swarm_rngs[swarm.id]);
  swarm.repel_heading = repulsion_heading(phi);
  swarm.repel_until = w.time + cfg.mitigation.repel_cooldown;
  w.new_leg[swarm.id] = 1;
  log_event(w, EventKind::Repulsion, fire_id, swarm.id, sensing_uav);
}

/// New leg for the whole swarm. k* draws the leg that moves the swarm disk;
/// the other members draw their own heading and length about p_k* and are
/// projected into the disk around the end of k*'s leg.
void generate_leg(WorldState &w, const ScenarioConfig &cfg, SwarmSearchState &swarm, bool repelled) {
  RngStream &rng = w.swarm_rngs[swarm.id];
  const Rect &area = cfg.search_area;
  const double phi_star = repelled ? swarm.repel_heading : info_direction(w, swarm, rng);
  const double phi0 = search_cone_halfwidth(swarm.max_temperature, cfg.search.k_phi, cfg.search.k_e);
  const double step = swarm.mode == SearchMode::Explore ? cfg.search.levy_step : cfg.search.brown_step;
  const Vec2 p_kstar = w.uavs[swarm.kstar].pos;

  struct Draw {
    double psi;
    double l;
  };
  std::vector<Draw> draws;
  Vec2 predicted;
  for (int id : swarm.members) {
    const double psi = sample_heading(phi_star, phi0, rng);
    const double l = sample_step_length(swarm.mode, rng, cfg.search, w.levy_max);
    draws.push_back({psi, l});
    if (id == swarm.kstar) predicted = area.clamp(p_kstar + unit_from_angle(psi) * (step * l));
  }

  const UavMode mode = repelled ? UavMode::Repelled
                                : (swarm.mode == SearchMode::Explore ? UavMode::Explore : UavMode::Exploit);
  for (std::size_t i = 0; i < swarm.members.size(); ++i) {
    UavState &u = w.uavs[swarm.members[i]];
    u.waypoint = next_waypoint(p_kstar, draws[i].psi, step, draws[i].l, area, predicted, cfg.swarm_radius);
    u.waypoint_vel = {};
    u.mode = mode;
  }
  w.new_leg[swarm.id] = 0;
}

void search_mscidc(WorldState &w, const ScenarioConfig &cfg, SwarmSearchState &swarm) {
  const SensingParams &sp = cfg.sensing;
  const bool cooling_down = swarm.repel_until > w.time;

  for (int id : swarm.members) {
    const SensorReading &r = *w.readings[id];
    if (r.candidate < 0) continue;
    const int j = r.candidate;
    if (!w.records[j]) {
      if (r.probability >= sp.gamma) {
        lock_on_new_fire(w, cfg, swarm, j, id);
        return;
      }
      continue;
    }
    // Someone else's fire. Merging takes precedence over repulsion.
    if (!(r.probability > sp.gamma0)) continue;
    const FireMitigationRecord &rec = *w.records[j];
    const bool merge = merging_decision(area(w.fires[j]), fires_remaining(w), rec.n_qs(), cfg.mitigation.delta_area,
                                        cfg.mitigation.delta_fires, cfg.mitigation.delta_swarms);
    if (merge) {
      merge_into(w, swarm, j, id);
      return;
    }
    if (!cooling_down && repulsion_decision(r.probability, sp.gamma0, sp.gamma, true, false, merge)) {
      repel(w, cfg, swarm, j, id);
      break;
    }
  }

  const bool repelled = swarm.repel_until > w.time;
  const SearchMode mode = repelled ? SearchMode::Explore : select_mode(swarm.max_temperature, sp.xi);
  if (mode != swarm.mode) w.new_leg[swarm.id] = 1;
  swarm.mode = mode;

  bool all_reached = true;
  for (int id : swarm.members) all_reached = all_reached && waypoint_reached(w.uavs[id], cfg.kinematics.cruise_speed, cfg.engine.dt);
  if (all_reached || w.new_leg[swarm.id]) generate_leg(w, cfg, swarm, repelled);

  for (const auto &o : local_attraction(swarm, w.uavs, cfg.swarm_radius)) {
    UavState &u = w.uavs[o.uav];
    u.waypoint = o.waypoint;
    u.waypoint_vel = {};
    u.mode = o.mode;
  }
}

void search_baseline(WorldState &w, const ScenarioConfig &cfg, SwarmSearchState &swarm) {
  const int id = swarm.members.front();
  UavState &u = w.uavs[id];
  const SensorReading &r = *w.readings[id];

  if (r.candidate >= 0 && r.probability >= cfg.sensing.gamma) {
    const int j = r.candidate;
    if (!w.records[j]) {
      lock_on_new_fire(w, cfg, swarm, j, id);
      return;
    }
    if (w.records[j]->n_qs() < cfg.mitigation.delta_swarms) {
      merge_into(w, swarm, j, id);
      return;
    }
  }

  const bool exploit = w.strategy == Strategy::Oms && r.temperature >= cfg.sensing.xi;
  swarm.mode = exploit ? SearchMode::Exploit : SearchMode::Explore;
  if (w.new_leg[swarm.id] || waypoint_reached(u, cfg.kinematics.cruise_speed, cfg.engine.dt)) {
    u.waypoint = baseline_waypoint(w.strategy, u, r, w.uav_rngs[id], cfg.search_area, cfg);
    u.waypoint_vel = {};
    w.new_leg[swarm.id] = 0;
  }
  u.mode = exploit ? UavMode::Exploit : UavMode::Explore;
}

void coordinate_fire(WorldState &w, const ScenarioConfig &cfg, int fire_id) {
  FireFront &fire = w.fires[fire_id];
  FireMitigationRecord &rec = *w.records[fire_id];
  const double dt = cfg.engine.dt;

  for (MitigatorEntry &e : rec.members) {
    if (e.joined) continue;
    UavState &u = w.uavs[e.uav];
    u.waypoint = point_on_front(fire, e.pending ? e.sector.theta : e.sector.theta_ref);
    if (waypoint_reached(u, cfg.kinematics.cruise_speed, dt)) {
      e.joined = true;
      e.join_time = w.time;
      u.mode = UavMode::Mitigate;
      fire.joined_uavs.push_back({e.uav, w.time});
      log_event(w, EventKind::Join, fire_id, e.swarm, e.uav);
    }
  }

  if (rec.has_pending()) {
    const bool arrived = std::all_of(rec.members.begin(), rec.members.end(),
                                     [](const MitigatorEntry &e) { return !e.pending || e.joined; });
    if (arrived) {
      repartition(rec, fire, w.uavs);
      log_event(w, EventKind::Repartition, fire_id, -1, -1);
    }
  }

  for (MitigatorEntry &e : rec.members) {
    UavState &u = w.uavs[e.uav];
    if (!e.joined || e.pending) {
      u.sector = e.sector;
      continue;
    }
    const double omega = nominal_angular_velocity(fire, cfg.mitigation.v_mit, e.sector.theta);
    const double theta_before = e.sector.theta;
    e.sector = angular_control(e.sector, omega, cfg.mitigation.k_m, cfg.mitigation.delta_theta, dt,
                               cfg.mitigation.control_form);
    const double theta_rate = (e.sector.theta - theta_before) / dt;
    Vec2 feed = Vec2{-fire.a * std::sin(e.sector.theta), fire.b * std::cos(e.sector.theta)} * theta_rate;
    const double speed = norm(feed);
    if (speed > cfg.mitigation.v_mit) feed *= cfg.mitigation.v_mit / speed;
    u.waypoint = point_on_front(fire, e.sector.theta);
    u.waypoint_vel = feed;
    u.mode = UavMode::Mitigate;
    u.sector = e.sector;
  }
}

/// Fire is out: every swarm that worked on it goes back to searching under
/// its own identity.
void release(WorldState &w, int fire_id) {
  w.extinction_time[fire_id] = w.time;
  log_event(w, EventKind::Extinction, fire_id, -1, -1);
  const FireMitigationRecord &rec = *w.records[fire_id];
  for (int s : rec.swarms) {
    SwarmSearchState &swarm = w.swarms[s];
    swarm.mode = SearchMode::Explore;
    swarm.target_fire = -1;
    w.new_leg[s] = 1;
    for (int id : swarm.members) {
      UavState &u = w.uavs[id];
      u.mode = UavMode::Explore;
      u.sector.reset();
      u.waypoint = u.pos;
      u.waypoint_vel = {};
    }
  }
  w.records[fire_id].reset();
}

double total_area(const WorldState &w) {
  double sum = 0.0;
  for (const auto &f : w.fires) {
    if (f.active()) sum += area(f);
  }
  return sum;
}

}  // namespace

std::string_view to_string(EventKind k) {
  switch (k) {
    case EventKind::Detection:
      return "detection";
    case EventKind::Join:
      return "join";
    case EventKind::Merge:
      return "merge";
    case EventKind::Repulsion:
      return "repulsion";
    case EventKind::Repartition:
      return "repartition";
    case EventKind::Extinction:
      return "extinction";
  }
  return "unknown";
}

WorldState init_world(const ScenarioConfig &cfg, std::uint64_t run_index) {
  const std::uint64_t seed = run_seed(cfg.engine.base_seed, run_index);
  WorldState w;
  w.strategy = cfg.engine.strategy;
  w.regulated = w.strategy == Strategy::Mscidc;
  w.quench_rate = quench_area_rate(cfg.quench.water_rate, cfg.quench.c, cfg.quench.nu, cfg.fuel.flame_length);
  w.levy_max = std::max(1.0, cfg.search_area.diagonal() / cfg.search.levy_step);
  w.noise_rng = RngStream(seed, kNoiseStream);

  const double rate = spread_rate(fireline_intensity(cfg.fuel.flame_length, cfg.fuel.alpha, cfg.fuel.beta),
                                  cfg.fuel.heat_of_combustion, cfg.fuel.fuel_load);
  for (std::size_t j = 0; j < cfg.fires.size(); ++j) {
    FireFront f;
    f.id = static_cast<int>(j);
    f.center = cfg.fires[j].center;
    f.a = cfg.fires[j].a;
    f.b = cfg.fires[j].b;
    f.spread_rate = rate;
    w.fires.push_back(f);
  }
  w.records.resize(w.fires.size());
  w.detection_time.assign(w.fires.size(), -1.0);
  w.area_at_detection.assign(w.fires.size(), 0.0);
  w.extinction_time.assign(w.fires.size(), -1.0);

  RngStream world_rng(seed, kWorldStream);
  const Rect &area = cfg.search_area;
  const double margin_x = std::min(cfg.swarm_radius, 0.5 * area.width());
  const double margin_y = std::min(cfg.swarm_radius, 0.5 * area.height());
  std::vector<std::vector<int>> groups;
  for (int size : cfg.swarm_sizes) {
    const Vec2 center{world_rng.uniform(area.x_min + margin_x, area.x_max - margin_x),
                      world_rng.uniform(area.y_min + margin_y, area.y_max - margin_y)};
    std::vector<int> ids;
    for (int k = 0; k < size; ++k) {
      const double r = cfg.swarm_radius * std::sqrt(world_rng.uniform01());
      const double phi = world_rng.uniform(-kPi, kPi);
      UavState u;
      u.id = static_cast<int>(w.uavs.size());
      u.pos = area.clamp(center + unit_from_angle(phi) * r);
      u.waypoint = u.pos;
      ids.push_back(u.id);
      w.uavs.push_back(u);
    }
    groups.push_back(std::move(ids));
  }
  if (!w.regulated) {
    groups.clear();
    for (const auto &u : w.uavs) groups.push_back({u.id});
  }
  for (std::size_t s = 0; s < groups.size(); ++s) {
    SwarmSearchState swarm;
    swarm.id = static_cast<int>(s);
    swarm.members = groups[s];
    for (int id : swarm.members) w.uavs[id].swarm = swarm.id;
    w.swarms.push_back(std::move(swarm));
    w.swarm_rngs.emplace_back(seed, kSwarmStreamBase + s);
  }
  for (const auto &u : w.uavs) w.uav_rngs.emplace_back(seed, kUavStreamBase + u.id);
  w.readings.resize(w.uavs.size());
  w.new_leg.assign(w.swarms.size(), 1);
  for (auto &swarm : w.swarms) refresh(swarm, w.uavs);

  w.initial_area = total_area(w);
  w.peak_area = w.initial_area;
  return w;
}

void tick(WorldState &w, const ScenarioConfig &cfg) {
  const double dt = cfg.engine.dt;

  for (std::size_t j = 0; j < w.fires.size(); ++j) {
    const bool quenched = w.records[j] && w.records[j]->n_active() > 0;
    if (!quenched) w.fires[j] = grow(w.fires[j], dt);
  }

  for (const UavState &u : w.uavs) {
    const double noise = cfg.sensing.noise_std > 0.0 ? cfg.sensing.noise_std * w.noise_rng.normal() : 0.0;
    w.readings[u.id] = sample(u, w.fires, w.readings[u.id], w.time, dt, cfg.sensing, noise);
  }

  for (SwarmSearchState &swarm : w.swarms) {
    if (swarm.mode == SearchMode::Locked) continue;
    swarm.info.clear();
    for (int id : swarm.members) swarm.info.push_back(*w.readings[id]);
    refresh(swarm, w.uavs);
    if (w.strategy == Strategy::Mscidc) {
      search_mscidc(w, cfg, swarm);
    } else {
      search_baseline(w, cfg, swarm);
    }
  }

  for (std::size_t j = 0; j < w.fires.size(); ++j) {
    if (w.records[j]) coordinate_fire(w, cfg, static_cast<int>(j));
  }

  for (UavState &u : w.uavs) {
    const Vec2 ref = reference_velocity(u.pos, u.waypoint, u.waypoint_vel, cfg.kinematics.cruise_speed,
                                        cfg.kinematics.tau);
    u = step(u, ref, cfg.kinematics.pole, dt);
    u.pos = cfg.search_area.clamp(u.pos);
  }

  for (std::size_t j = 0; j < w.fires.size(); ++j) {
    if (!w.records[j]) continue;
    const int active = w.records[j]->n_active();
    if (active == 0) continue;
    w.fires[j] = apply_quench(w.fires[j], active, w.quench_rate, dt);
    if (!w.fires[j].active()) {
      w.time = (w.ticks + 1) * dt;
      release(w, static_cast<int>(j));
    }
  }

  ++w.ticks;
  w.time = w.ticks * dt;
  w.peak_area = std::max(w.peak_area, total_area(w));
}

StepRecord snapshot(const WorldState &w) {
  StepRecord s;
  s.time = w.time;
  for (std::size_t j = 0; j < w.fires.size(); ++j) {
    if (w.detection_time[j] >= 0.0) ++s.fires_detected;
    if (w.fires[j].state == FireState::UnderMitigation) ++s.fires_under_mitigation;
    if (w.fires[j].state == FireState::Extinguished) ++s.fires_extinguished;
    if (w.records[j]) s.max_swarms_on_fire = std::max(s.max_swarms_on_fire, w.records[j]->n_qs());
  }
  s.fires_remaining = static_cast<int>(w.fires.size()) - s.fires_extinguished;
  for (const auto &swarm : w.swarms) {
    if (swarm.mode == SearchMode::Locked) {
      ++s.swarms_quenching;
    } else {
      ++s.swarms_searching;
    }
  }
  s.live_swarms = static_cast<int>(w.swarms.size());
  s.total_area = total_area(w);
  return s;
}

RunResult run_world(WorldState w, const ScenarioConfig &cfg, std::uint64_t run_index, const RunOptions &options,
                    const StepObserver &observer) {
  RunResult res;
  res.run_index = run_index;
  res.strategy = w.strategy;
  res.n_swarms = static_cast<int>(w.swarms.size());

  auto log_step = [&] {
    if (options.record_series) res.series.push_back(snapshot(w));
    if (observer) observer(w);
  };
  auto any_active = [&] { return std::any_of(w.fires.begin(), w.fires.end(), [](const auto &f) { return f.active(); }); };

  log_step();
  const long max_ticks = static_cast<long>(std::ceil(cfg.engine.t_max / cfg.engine.dt - 1e-9));
  while (any_active() && w.ticks < max_ticks) {
    tick(w, cfg);
    if (w.ticks % cfg.engine.trace_stride == 0) log_step();
  }
  if (w.ticks % cfg.engine.trace_stride != 0) log_step();

  res.end_time = w.time;
  res.complete = !any_active();
  res.initial_area = w.initial_area;
  res.peak_area = w.peak_area;
  res.fer = w.initial_area > 0.0 ? (w.peak_area - w.initial_area) / w.initial_area : 0.0;

  bool all_detected = true;
  double last_detection = 0.0;
  double last_extinction = 0.0;
  for (std::size_t j = 0; j < w.fires.size(); ++j) {
    FireOutcome o;
    o.id = static_cast<int>(j);
    o.detected = w.detection_time[j] >= 0.0;
    o.detection_time = o.detected ? w.detection_time[j] : 0.0;
    o.area_at_detection = w.area_at_detection[j];
    o.extinguished = w.extinction_time[j] >= 0.0;
    o.extinction_time = o.extinguished ? w.extinction_time[j] : 0.0;
    o.final_area = w.fires[j].active() ? area(w.fires[j]) : 0.0;
    if (o.detected) o.quench_time = (o.extinguished ? o.extinction_time : w.time) - o.detection_time;
    all_detected = all_detected && o.detected;
    last_detection = std::max(last_detection, o.detection_time);
    last_extinction = std::max(last_extinction, o.extinction_time);
    res.fires.push_back(o);
  }
  res.detection_time = all_detected ? last_detection : w.time;
  res.mission_time = res.complete ? last_extinction : w.time;

  const ObjectiveValue obj =
      weighted_objective(res, cfg.objective.w1, cfg.objective.w2, cfg.objective.w3, cfg.objective.q_tmax);
  res.objective = obj.value;
  res.quench_violations = obj.violations;
  for (auto &o : res.fires) o.quench_violation = o.detected && o.quench_time >= cfg.objective.q_tmax;
  if (options.record_events) res.events = std::move(w.events);
  return res;
}

RunResult run(const ScenarioConfig &cfg, std::uint64_t run_index, const RunOptions &options,
              const StepObserver &observer) {
  return run_world(init_world(cfg, run_index), cfg, run_index, options, observer);
}

ObjectiveValue weighted_objective(const RunResult &result, double w1, double w2, double w3, double q_tmax) {
  double detected_area = 0.0;
  double undetected_area = 0.0;
  double quench = 0.0;
  ObjectiveValue out;
  for (const auto &f : result.fires) {
    if (f.detected) {
      detected_area += f.area_at_detection;
      quench += f.quench_time;
      if (f.quench_time >= q_tmax) ++out.violations;
    } else {
      undetected_area += f.final_area;
    }
  }
  out.value = w1 * detected_area + w2 * undetected_area + w3 * quench;
  return out;
}

std::vector<std::string> bookkeeping_violations(const RunResult &r, const ScenarioConfig &cfg) {
  std::vector<std::string> out;
  auto report = [&](double t, const std::string &what) {
    std::ostringstream os;
    os << "t=" << t << ": " << what;
    out.push_back(os.str());
  };
  const int n_f = static_cast<int>(cfg.fires.size());
  int prev_detected = 0;
  int prev_extinguished = 0;
  for (const StepRecord &s : r.series) {
    if (s.fires_detected != s.fires_under_mitigation + s.fires_extinguished)
      report(s.time, "F_d != F_f + extinguished");
    if (s.fires_remaining != n_f - s.fires_extinguished) report(s.time, "F_r != n_f - extinguished");
    if (s.swarms_searching + s.swarms_quenching != s.live_swarms) report(s.time, "S_s + S_q != live swarms");
    if (s.max_swarms_on_fire > cfg.mitigation.delta_swarms) report(s.time, "N_qs > delta_s");
    if (s.fires_detected < prev_detected) report(s.time, "F_d decreased");
    if (s.fires_extinguished < prev_extinguished) report(s.time, "extinguished count decreased");
    prev_detected = s.fires_detected;
    prev_extinguished = s.fires_extinguished;
  }
  if (r.fer < 0.0) report(r.end_time, "FER < 0");
  if (r.detection_time > r.mission_time) report(r.end_time, "detection_time > mission_time");
  for (const Event &e : r.events) {
    if (e.fire < 0 || e.fire >= n_f) continue;
    const FireOutcome &f = r.fires[e.fire];
    if ((e.kind == EventKind::Join || e.kind == EventKind::Extinction) && (!f.detected || e.time < f.detection_time))
      report(e.time, "event before detection of fire " + std::to_string(e.fire));
    if (e.kind == EventKind::Join && f.extinguished && e.time > f.extinction_time)
      report(e.time, "join after extinction of fire " + std::to_string(e.fire));
  }
  return out;
}

}  // namespace swarmfire
