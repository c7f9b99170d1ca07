#include <numeric>
#include <vector>

#include "doctest.h"
#include "swarmfire/montecarlo.hpp"

using namespace swarmfire;

namespace {

ScenarioConfig short_config() {
  ScenarioConfig cfg = *preset("pine-table1");
  cfg.engine.t_max = 1800;
  return cfg;
}

}  // namespace

TEST_SUITE("montecarlo") {
  TEST_CASE("parallel driver matches the serial reference for any thread count") {
    const ScenarioConfig cfg = short_config();
    const auto serial = monte_carlo_serial(cfg, 6);
    for (int jobs : {1, 2, 3, 8}) {
      CAPTURE(jobs);
      CHECK(monte_carlo(cfg, 6, jobs) == serial);
    }
    for (std::size_t i = 0; i < serial.size(); ++i) CHECK(serial[i].run_index == i);
  }

  TEST_CASE("runs must be positive") {
    CHECK_THROWS_AS(monte_carlo(short_config(), 0), std::invalid_argument);
    CHECK_THROWS_AS(monte_carlo_serial(short_config(), -1), std::invalid_argument);
  }

  TEST_CASE("describe") {
    const Statistics s = describe({4, 1, 3, 2, 5});
    CHECK(s.n == 5);
    CHECK(s.mean == 3);
    CHECK(s.median == 3);
    CHECK(s.q1 == 2);
    CHECK(s.q3 == 4);
    CHECK(s.min == 1);
    CHECK(s.max == 5);
    CHECK(s.stddev == doctest::Approx(std::sqrt(2.5)));
    CHECK(describe({}).n == 0);
    CHECK(describe({7}).stddev == 0.0);
  }

  TEST_CASE("aggregate mean is the arithmetic mean of the runs") {
    const auto runs = monte_carlo(short_config(), 5);
    const Aggregate a = aggregate(runs);
    double sum = 0.0;
    int incomplete = 0;
    for (const auto &r : runs) {
      sum += r.mission_time;
      incomplete += !r.complete;
    }
    CHECK(a.mission_time.mean == doctest::Approx(sum / 5));
    CHECK(a.incomplete == incomplete);
    CHECK(a.runs == 5);
  }

  TEST_CASE("comparison is paired by run index") {
    const auto res = compare(short_config(), {Strategy::Mscidc, Strategy::Levy}, 3);
    REQUIRE(res.size() == 2);
    CHECK(res[0].strategy == Strategy::Mscidc);
    CHECK(res[1].runs.size() == 3);
    CHECK(res[1].runs[2].strategy == Strategy::Levy);
    CHECK(res[1].stats.n_swarms == 15);
    CHECK(res[0].stats.n_swarms == 7);
  }
}
