// Hand-computed reference values and property checks, grouped by module.

#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "swarmfire/engine.hpp"
#include "swarmfire/montecarlo.hpp"

using namespace swarmfire;

namespace {

FireFront ellipse(double a, double b, double rate = 0.0) {
  FireFront f;
  f.a = a;
  f.b = b;
  f.spread_rate = rate;
  return f;
}

SensorReading rate_reading(int uav, double rate) {
  SensorReading r;
  r.uav = uav;
  r.temperature_rate = rate;
  return r;
}

}  // namespace

TEST_SUITE("firemodel") {
  TEST_CASE("intensity and spread rate values") {
    CHECK(fireline_intensity(4, 259.833, 2.174) == doctest::Approx(5291.5).epsilon(1e-4));
    CHECK(fireline_intensity(1, 10, 2) == doctest::Approx(10));
    CHECK(fireline_intensity(2, 1, 1) == doctest::Approx(2));
    CHECK(spread_rate(5291.5, 18600, 4) == doctest::Approx(0.0711).epsilon(1e-3));
    CHECK(spread_rate(0, 18600, 4) == 0.0);
    CHECK(spread_rate(100, 100, 1) == doctest::Approx(1.0));
  }

  TEST_CASE("growth and area values") {
    const FireFront g = grow(ellipse(300, 250, 0.0711), 10);
    CHECK(g.a == doctest::Approx(300.711));
    CHECK(g.b == doctest::Approx(250.711));
    CHECK(grow(ellipse(300, 250), 10).a == 300);
    FireFront out = ellipse(300, 250, 0.0711);
    out.state = FireState::Extinguished;
    CHECK(grow(out, 10).a == 300);
    CHECK(area(ellipse(300, 250)) == doctest::Approx(235619.4).epsilon(1e-6));
    CHECK(area(ellipse(50, 50)) == doctest::Approx(7854.0).epsilon(1e-5));
    CHECK(area(ellipse(0, 0)) == 0.0);
  }

  TEST_CASE("sector values") {
    CHECK(sector_area(ellipse(200, 200), 0, kPi / 2) == doctest::Approx(31415.9).epsilon(1e-6));
    CHECK(sector_area(ellipse(300, 250), 0, kPi / 2) == doctest::Approx(58904.9).epsilon(1e-6));
    CHECK(sector_area(ellipse(300, 250), 0, kTwoPi) == doctest::Approx(235619.4).epsilon(1e-6));
    CHECK(partition_sectors(ellipse(300, 250), 1) == std::vector<double>{0.0, kTwoPi});
    const auto b3 = partition_sectors(ellipse(300, 250), 3);
    for (int m = 0; m < 3; ++m)
      CHECK(oracle::ellipse_sector_area(300, 250, b3[m], b3[m + 1]) == doctest::Approx(235619.449 / 3).epsilon(1e-7));
  }

  TEST_CASE("quench values") {
    const FireFront c = apply_quench(ellipse(100, 100), 1, kPi * 100 * 100 / 10, 10);
    CHECK(c.state == FireState::Extinguished);
    const FireFront e = ellipse(300, 250);
    const FireFront q = apply_quench(e, 5, 2, 1);
    CHECK(area(e) - area(q) == doctest::Approx(10).epsilon(1e-6));
    CHECK(q.a - q.b == doctest::Approx(50));
    CHECK(kPi * q.a * q.b == doctest::Approx(area(e) - 10));
  }

  TEST_CASE("front point and distance values") {
    const FireFront f = ellipse(300, 250);
    CHECK(point_on_front(f, 0).x == doctest::Approx(300));
    CHECK(point_on_front(f, kPi / 2).y == doctest::Approx(250));
    const Vec2 d = point_on_front(ellipse(200, 200), kPi / 4);
    CHECK(d.x == doctest::Approx(141.42).epsilon(1e-4));
    CHECK(d.y == doctest::Approx(141.42).epsilon(1e-4));
    CHECK(distance_to_front(ellipse(100, 100), {250, 0}) == doctest::Approx(150));
    CHECK(distance_to_front(f, {10, 20}) == 0.0);
    CHECK(distance_to_front(f, {400, 0}) == doctest::Approx(100));
  }

  TEST_CASE("lifecycle properties under random growth and quench") {
    RngStream rng(17, 0);
    for (int trial = 0; trial < 50; ++trial) {
      const double b = rng.uniform(20, 300);
      FireFront f = ellipse(b + rng.uniform(0, 100), b, 0.0711);
      const double gap = f.a - f.b;
      double quenched = 0.0;
      int stage = 0;
      for (int i = 0; i < 4000 && f.active(); ++i) {
        const int n = static_cast<int>(rng.uniform(0, 4));
        if (n > 0) f.state = FireState::UnderMitigation;
        f = apply_quench(f, n, 125, 0.5);
        const int s = static_cast<int>(f.state);
        REQUIRE(s >= stage);
        stage = s;
        REQUIRE(f.quenched_area_total >= quenched);
        quenched = f.quenched_area_total;
        if (f.active()) {
          REQUIRE(f.a - f.b == doctest::Approx(gap).epsilon(1e-9));
          REQUIRE(f.b > 0.0);
        }
      }
    }
  }
}

TEST_SUITE("vehicle") {
  TEST_CASE("reference velocity and lag values") {
    CHECK(reference_velocity({3, 4}, {3, 4}, {}, 20, 1) == Vec2{0, 0});
    CHECK(reference_velocity({0, 0}, {100, 0}, {}, 20, 1).x == doctest::Approx(19.80).epsilon(1e-3));
    UavState u;
    CHECK(step(u, {10, 0}, 1, 1).vel.x == doctest::Approx(6.321).epsilon(1e-4));
    u.vel = {3, -1};
    const UavState eq = step(u, {3, -1}, 1, 0.5);
    CHECK(eq.vel == Vec2{3, -1});
    CHECK(eq.pos.x == doctest::Approx(1.5));
  }

  TEST_CASE("continuous limit of the lag") {
    UavState u;
    u.vel = {2, 0};
    const double h = 1e-6;
    const UavState n = step(u, {10, 0}, 1.0, h);
    CHECK((n.vel.x - u.vel.x) / h == doctest::Approx(-1.0 * 2 + 1.0 * 10).epsilon(1e-5));
  }
}

TEST_SUITE("sensing") {
  TEST_CASE("field values") {
    std::vector<FireFront> fires{ellipse(100, 100)};
    CHECK(temperature_at(fires, {350, 0}, 300, 1200, 250) == doctest::Approx(845.9).epsilon(1e-4));
    CHECK(temperature_at(std::vector<FireFront>{}, {0, 0}, 300, 1200, 250) == 300);
    CHECK(detection_probability(400, 100, 300) == 0.0);
  }

  TEST_CASE("stationary UAV sees no temperature change") {
    std::vector<FireFront> fires{ellipse(100, 100)};
    UavState u;
    u.pos = {400, 0};
    const SensingParams sp;
    const SensorReading a = sample(u, fires, std::nullopt, 0, 0.5, sp);
    CHECK(sample(u, fires, a, 0.5, 0.5, sp).temperature_rate == 0.0);
  }

  TEST_CASE("radial approach raises the temperature along the whole shoulder") {
    std::vector<FireFront> fires{ellipse(100, 100)};
    const SensingParams sp;
    UavState u;
    u.pos = {1500, 0};
    std::optional<SensorReading> prev;
    for (int i = 0; i < 120; ++i) {
      const SensorReading r = sample(u, fires, prev, i * 0.5, 0.5, sp);
      if (prev) CHECK(r.temperature_rate > 0.0);
      prev = r;
      u.pos.x -= 10.0;
    }
  }

  TEST_CASE("probability properties") {
    RngStream rng(8, 0);
    std::vector<FireFront> fires{ellipse(200, 100)};
    const SensingParams sp;
    for (int i = 0; i < 2000; ++i) {
      UavState u;
      u.pos = {rng.uniform(-800, 800), rng.uniform(-800, 800)};
      const SensorReading r = sample(u, fires, std::nullopt, 0, 0.5, sp);
      CHECK(r.probability >= 0.0);
      CHECK(r.probability <= 1.0);
      if (distance_to_front(fires[0], u.pos) > sp.sensing_radius) CHECK(r.probability == 0.0);
      CHECK(r.detected.has_value() == (r.probability >= sp.gamma));
    }
  }
}

TEST_SUITE("search") {
  TEST_CASE("max-information member values") {
    CHECK(max_info_member(std::vector<SensorReading>{rate_reading(1, 0.1), rate_reading(2, 0.5), rate_reading(3, 0.2)}) == 2);
    CHECK(max_info_member(std::vector<SensorReading>{rate_reading(4, 0), rate_reading(2, 0), rate_reading(3, 0)}) == 2);
    CHECK(max_info_member(std::vector<SensorReading>{rate_reading(9, -1)}) == 9);
  }

  TEST_CASE("full cone allows any heading") {
    RngStream rng(6, 0);
    double lo = 10, hi = -10;
    for (int i = 0; i < 100000; ++i) {
      const double h = sample_heading(0.3, kPi, rng);
      lo = std::min(lo, h);
      hi = std::max(hi, h);
    }
    CHECK(lo < -kPi + 0.01);
    CHECK(hi > kPi - 0.01);
  }

  TEST_CASE("exploration lengths are truncated at the area diagonal") {
    RngStream rng(6, 1);
    const SearchParams sp;
    const double levy_max = Rect{0, 0, 10000, 10000}.diagonal() / sp.levy_step;
    for (int i = 0; i < 200000; ++i) REQUIRE(sample_step_length(SearchMode::Explore, rng, sp, levy_max) <= levy_max);
  }

  TEST_CASE("waypoint values") {
    const Rect area{0, 0, 10000, 10000};
    CHECK(next_waypoint({5000, 5000}, 1.0, 500, 0.0, area, {5000, 5000}, 250) == Vec2{5000, 5000});
    const Vec2 w = next_waypoint({5000, 5000}, 0.0, 500, 1.0, area, {5500, 5000}, 250);
    CHECK(w.x == doctest::Approx(5500));
    CHECK(w.y == doctest::Approx(5000));
    const Vec2 edge = next_waypoint({9900, 5000}, 0.0, 500, 1.0, area, {10000, 5000}, 250);
    CHECK(edge.x == doctest::Approx(10000));
  }

  TEST_CASE("attraction values") {
    std::vector<UavState> uavs(4);
    for (int i = 0; i < 4; ++i) {
      uavs[i].id = i;
      uavs[i].pos = {1000.0 + 10 * i, 1000};
    }
    SwarmSearchState s;
    s.members = {0, 1, 2, 3};
    refresh(s, uavs);
    CHECK(local_attraction(s, uavs, 250).empty());
    for (int i = 0; i < 3; ++i) uavs[i].pos = {1000, 1000};
    uavs[3].pos = {1000, 1400};
    refresh(s, uavs);
    CHECK(s.center.y == doctest::Approx(1100));
    const auto o = local_attraction(s, uavs, 250);
    REQUIRE(o.size() == 1);
    CHECK(o[0].uav == 3);
    CHECK(o[0].waypoint == s.center);
  }

  TEST_CASE("uniform baseline covers the area evenly") {
    ScenarioConfig cfg;
    RngStream rng(12, 0);
    UavState u;
    SensorReading r;
    std::vector<int> cells(100, 0);
    const int n = 1000000;
    for (int i = 0; i < n; ++i) {
      const Vec2 p = baseline_waypoint(Strategy::Uniform, u, r, rng, cfg.search_area, cfg);
      const int cx = std::min(9, static_cast<int>(p.x / 1000)), cy = std::min(9, static_cast<int>(p.y / 1000));
      ++cells[cy * 10 + cx];
    }
    double chi2 = 0.0;
    for (int c : cells) chi2 += (c - n / 100.0) * (c - n / 100.0) / (n / 100.0);
    // 99th percentile of chi-square with 99 degrees of freedom.
    CHECK(chi2 < 134.6);
  }

  TEST_CASE("OMS below the threshold takes Levy-length steps") {
    ScenarioConfig cfg;
    RngStream rng(12, 1);
    UavState u;
    u.pos = {5000, 5000};
    SensorReading r;
    r.temperature = cfg.sensing.t_ambient;
    for (int i = 0; i < 5000; ++i) {
      const Vec2 p = baseline_waypoint(Strategy::Oms, u, r, rng, cfg.search_area, cfg);
      const bool on_edge = p.x == 0 || p.y == 0 || p.x == 10000 || p.y == 10000;
      CHECK((distance(p, u.pos) >= cfg.search.levy_step - 1e-9 || on_edge));
    }
  }
}

TEST_SUITE("mitigation") {
  TEST_CASE("quench rate values") {
    CHECK(quench_area_rate(5, 0.1, 0.0, 4) == doctest::Approx(50));
    CHECK(quench_area_rate(0.4, 0.1, 1, 4) == doctest::Approx(1));
    CHECK(closed_form_quench_time(10000, 5, 2) == doctest::Approx(1000));
    CHECK(closed_form_quench_time(0, 5, 2) == 0.0);
  }

  TEST_CASE("eight UAVs get eight equal-area sectors; one UAV gets the whole fire") {
    FireFront f = ellipse(300, 250);
    std::vector<MemberPosition> m;
    for (int i = 0; i < 8; ++i) m.push_back({i, 0, point_on_front(f, 0.7 * i)});
    const FireMitigationRecord rec = assign_sectors(f, m);
    for (int k = 0; k < 8; ++k)
      CHECK(sector_area(f, rec.bounds[k], rec.bounds[k + 1]) == doctest::Approx(area(f) / 8).epsilon(1e-9));
    const FireMitigationRecord one = assign_sectors(f, std::vector<MemberPosition>{{0, 0, {400, 0}}});
    CHECK(one.bounds == std::vector<double>{0.0, kTwoPi});
    CHECK(one.members[0].sector.lo == 0.0);
    CHECK(one.members[0].sector.hi == doctest::Approx(kTwoPi));
  }

  TEST_CASE("growing membership from 2 to 3 keeps cyclic order") {
    FireFront f = ellipse(300, 250);
    std::vector<UavState> uavs(3);
    for (int i = 0; i < 3; ++i) {
      uavs[i].id = i;
      uavs[i].pos = point_on_front(f, 0.4 + 2.0 * i);
    }
    std::vector<MemberPosition> m{{0, 0, uavs[0].pos}, {1, 0, uavs[1].pos}};
    FireMitigationRecord rec = assign_sectors(f, m);
    MitigatorEntry e;
    e.uav = 2;
    e.swarm = 1;
    e.pending = true;
    rec.members.push_back(e);
    rec.swarms.push_back(1);
    repartition(rec, f, uavs);
    REQUIRE(rec.n_qu() == 3);
    for (int k = 0; k < 3; ++k)
      CHECK(oracle::ellipse_sector_area(300, 250, rec.bounds[k], rec.bounds[k + 1]) == doctest::Approx(area(f) / 3).epsilon(1e-7));
    // Sorted by angle, the UAVs hold consecutive sectors.
    const int s0 = rec.find(0)->sector.sector;
    CHECK(rec.find(1)->sector.sector == (s0 + 1) % 3);
    CHECK(rec.find(2)->sector.sector == (s0 + 2) % 3);
  }

  TEST_CASE("control values") {
    SectorAssignment s;
    s.lo = 0;
    s.hi = 1;
    s.theta = s.theta_ref = 0.5;
    const SectorAssignment n = angular_control(s, 0.02, -1, 0.05, 0.5);
    CHECK((n.theta - s.theta) / 0.5 == doctest::Approx(0.02));
    s.theta = s.theta_ref = 0.97;
    CHECK(angular_control(s, 0.02, -1, 0.05, 0.5).mu == -1);

    s.theta_ref = 0.5;
    s.theta = 1.0;
    double t = 0;
    while (std::abs(s.theta - s.theta_ref) >= 1e-3) {
      s = angular_control(s, 0.0, -1, 0.05, 0.5);
      t += 0.5;
    }
    CHECK(t == doctest::Approx(std::log(500.0)).epsilon(0.08));
  }

  TEST_CASE("nominal rate values") {
    CHECK(nominal_angular_velocity(ellipse(100, 100), 10, 1.234) == doctest::Approx(0.1));
    CHECK(nominal_angular_velocity(ellipse(200, 200), 10, 0) < nominal_angular_velocity(ellipse(100, 100), 10, 0));
    CHECK(nominal_angular_velocity(ellipse(300, 250), 10, 0) == doctest::Approx(10.0 / 250));
  }

  TEST_CASE("regulation values") {
    CHECK(merging_decision(2e5, 5, 1, 1e5, 2, 2));
    CHECK_FALSE(merging_decision(1e9, 1, 2, 1e5, 2, 2));
    CHECK_FALSE(merging_decision(1e3, 2, 1, 1e5, 2, 2));
    CHECK(repulsion_decision(0.7, 0.5, 0.9, true, false, false));
    CHECK_FALSE(repulsion_decision(0.95, 0.5, 0.9, true, false, true));
    CHECK(repulsion_heading(kPi / 2) == doctest::Approx(-kPi / 2));
    CHECK(std::abs(repulsion_heading(kPi)) < 1e-12);
  }
}

TEST_SUITE("engine") {
  TEST_CASE("ticking a world with every fire out only advances time") {
    ScenarioConfig cfg;
    cfg.fires = {FireSpec{{5000, 5000}, 50, 50}};
    WorldState w = init_world(cfg, 0);
    w.fires[0].state = FireState::Extinguished;
    const Vec2 fire_axes{w.fires[0].a, w.fires[0].b};
    tick(w, cfg);
    CHECK(w.time == doctest::Approx(cfg.engine.dt));
    CHECK(Vec2{w.fires[0].a, w.fires[0].b} == fire_axes);
    CHECK(w.events.empty());
  }

  TEST_CASE("detection is logged at the tick that crosses the threshold") {
    ScenarioConfig cfg;
    cfg.fires = {FireSpec{{5000, 5000}, 100, 100}};
    cfg.swarm_sizes = {1};
    WorldState w = init_world(cfg, 0);
    w.uavs[0].pos = w.uavs[0].waypoint = {5400, 5000};
    w.fires[0].spread_rate = 0.0;
    // Fly straight at the fire by pinning the waypoint.
    while (w.events.empty() && w.time < 100) {
      tick(w, cfg);
      w.uavs[0].waypoint = {5000, 5000};
    }
    REQUIRE_FALSE(w.events.empty());
    CHECK(w.events[0].kind == EventKind::Detection);
    // Sensing happens at the start of the tick, before time advances.
    CHECK(w.events[0].time == doctest::Approx(w.time - cfg.engine.dt));
  }

  TEST_CASE("later swarms see the merge count updated by earlier ones") {
    ScenarioConfig cfg;
    cfg.fires = {FireSpec{{5000, 5000}, 300, 250}};
    cfg.swarm_sizes = {2, 2, 2};
    WorldState w = init_world(cfg, 0);
    auto put = [&](int id, Vec2 p) { w.uavs[id].pos = w.uavs[id].waypoint = p; };
    put(0, {5300, 5000});
    put(1, {4700, 5000});
    put(2, {5000, 5330});
    put(3, {5010, 5330});
    put(4, {5000, 4670});
    put(5, {5010, 4670});
    tick(w, cfg);
    REQUIRE(w.records[0]);
    CHECK(w.records[0]->n_qs() == 2);
    CHECK(w.swarms[1].mode == SearchMode::Locked);
    CHECK(w.swarms[2].mode != SearchMode::Locked);
    CHECK(w.swarms[2].repel_until > w.time);
  }

  TEST_CASE("degenerate scenarios") {
    ScenarioConfig cfg;
    cfg.fires.clear();
    const RunResult none = run(cfg, 0);
    CHECK(none.complete);
    CHECK(none.mission_time == 0.0);
    CHECK(none.fer == 0.0);

    ScenarioConfig still = *preset("pine-table1");
    still.fuel.alpha = 1e-300;
    const RunResult r = run(still, 0);
    CHECK(r.fer == 0.0);
  }
}

TEST_SUITE("montecarlo") {
  TEST_CASE("single-run summary and repeated batches") {
    ScenarioConfig cfg = *preset("pine-table1");
    cfg.engine.t_max = 1200;
    const auto one = monte_carlo(cfg, 1);
    const Aggregate a = aggregate(one);
    CHECK(a.mission_time.mean == one[0].mission_time);
    CHECK(a.fer.stddev == 0.0);
    CHECK(monte_carlo(cfg, 3) == monte_carlo(cfg, 3));
  }
}
