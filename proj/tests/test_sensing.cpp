#include <vector>

#include "doctest.h"
#include "swarmfire/sensing.hpp"

using namespace swarmfire;

namespace {

FireFront fire_at(int id, Vec2 c, double a, double b) {
  FireFront f;
  f.id = id;
  f.center = c;
  f.a = a;
  f.b = b;
  return f;
}

UavState uav_at(Vec2 p) {
  UavState u;
  u.id = 4;
  u.pos = p;
  return u;
}

}  // namespace

TEST_SUITE("sensing") {
  TEST_CASE("detection probability") {
    CHECK(detection_probability(0, 100, 300) == 1.0);
    CHECK(detection_probability(100, 100, 300) == doctest::Approx(std::exp(-0.5)));
    CHECK(detection_probability(300, 100, 300) == doctest::Approx(std::exp(-4.5)));
    CHECK(detection_probability(300.01, 100, 300) == 0.0);
    double prev = 2.0;
    for (double d = 0; d <= 300; d += 10) {
      const double p = detection_probability(d, 100, 300);
      CHECK(p < prev);
      prev = p;
    }
  }

  TEST_CASE("temperature field") {
    const std::vector<FireFront> fires{fire_at(0, {0, 0}, 100, 50), fire_at(1, {2000, 0}, 10, 10)};
    CHECK(temperature_at(fires, {0, 0}, 300, 1200, 250) == 1200);
    CHECK(temperature_at(fires, {350, 0}, 300, 1200, 250) == doctest::Approx(300 + 900 * std::exp(-0.5)));
    CHECK(temperature_at(fires, {1000, 5000}, 300, 1200, 250) == 300);
    std::vector<FireFront> out = fires;
    out[0].state = FireState::Extinguished;
    CHECK(temperature_at(out, {0, 0}, 300, 1200, 250) == doctest::Approx(300));
  }

  TEST_CASE("sample picks the nearest active fire and attaches the descriptor above gamma") {
    const std::vector<FireFront> fires{fire_at(0, {0, 0}, 100, 50), fire_at(1, {500, 0}, 100, 100)};
    SensingParams sp;
    const SensorReading r = sample(uav_at({130, 0}), fires, std::nullopt, 0.0, 0.5, sp);
    CHECK(r.uav == 4);
    CHECK(r.candidate == 0);
    CHECK(r.candidate_distance == doctest::Approx(30));
    CHECK(r.probability == doctest::Approx(std::exp(-0.045)));
    REQUIRE(r.detected);
    CHECK(r.detected->a == 100);
    CHECK(r.temperature_rate == 0.0);
    CHECK(r.heading_to_fire == doctest::Approx(kPi));

    const SensorReading far = sample(uav_at({-250, 0}), fires, std::nullopt, 0.0, 0.5, sp);
    CHECK(far.candidate == 0);
    CHECK(far.probability < sp.gamma);
    CHECK_FALSE(far.detected);

    const SensorReading none = sample(uav_at({5000, 5000}), fires, std::nullopt, 0.0, 0.5, sp);
    CHECK(none.candidate == -1);
    CHECK(none.probability == 0.0);
  }

  TEST_CASE("temperature rate is a backward difference") {
    const std::vector<FireFront> fires{fire_at(0, {0, 0}, 100, 100)};
    SensingParams sp;
    const SensorReading first = sample(uav_at({600, 0}), fires, std::nullopt, 0.0, 0.5, sp);
    const SensorReading second = sample(uav_at({590, 0}), fires, first, 0.5, 0.5, sp);
    CHECK(second.temperature_rate == doctest::Approx((second.temperature - first.temperature) / 0.5));
    CHECK(second.temperature_rate > 0.0);
  }

  TEST_CASE("noise is additive") {
    const std::vector<FireFront> fires{fire_at(0, {0, 0}, 100, 100)};
    SensingParams sp;
    const double clean = sample(uav_at({600, 0}), fires, std::nullopt, 0, 0.5, sp).temperature;
    CHECK(sample(uav_at({600, 0}), fires, std::nullopt, 0, 0.5, sp, 1.5).temperature == doctest::Approx(clean + 1.5));
  }
}
