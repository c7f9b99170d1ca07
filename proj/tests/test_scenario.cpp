#include <string>

#include "doctest.h"
#include "swarmfire/scenario.hpp"

using namespace swarmfire;

namespace {

std::string error_of(const std::string &json) {
  try {
    parse_config(json);
  } catch (const ConfigError &e) {
    return e.what();
  }
  return {};
}

bool starts_with(const std::string &s, const std::string &prefix) { return s.rfind(prefix, 0) == 0; }

}  // namespace

TEST_SUITE("scenario") {
  TEST_CASE("table I preset") {
    const auto cfg = preset("pine-table1");
    REQUIRE(cfg);
    CHECK(cfg->total_uavs() == 15);
    CHECK(cfg->swarm_sizes.size() == 7);
    REQUIRE(cfg->fires.size() == 5);
    CHECK(cfg->fires[0].center == Vec2{2000, 6000});
    CHECK(cfg->fires[0].a == 300);
    CHECK(cfg->fires[0].b == 250);
    CHECK(cfg->fires[4].center == Vec2{9000, 8000});
    CHECK(cfg->fires[4].a == 50);
    CHECK(cfg->search_area.width() == 10000);
    CHECK_NOTHROW(validate(*cfg));
  }

  TEST_CASE("every swarm-count preset keeps 15 UAVs") {
    for (const auto &name : preset_names()) {
      CAPTURE(name);
      const auto cfg = preset(name);
      REQUIRE(cfg);
      CHECK(cfg->total_uavs() == 15);
    }
    CHECK(preset("pine-table1-s3")->swarm_sizes.size() == 3);
    CHECK(preset("pine-table1-s5")->swarm_sizes.size() == 5);
    CHECK(preset("pine-table1-s6")->swarm_sizes.size() == 6);
    CHECK_FALSE(preset("nope"));
  }

  TEST_CASE("write and parse round-trip exactly") {
    ScenarioConfig cfg = *preset("pine-table1-s5");
    cfg.engine.base_seed = 123456789012345ULL;
    cfg.engine.strategy = Strategy::Levy;
    cfg.mitigation.control_form = ControlForm::Printed;
    cfg.sensing.noise_std = 0.1;
    CHECK(parse_config(write_config(cfg)) == cfg);
  }

  TEST_CASE("missing groups take defaults") {
    const ScenarioConfig cfg = parse_config(R"({"fires": [{"center": [100, 200], "a": 20, "b": 10}]})");
    CHECK(cfg.fires.size() == 1);
    CHECK(cfg.sensing == SensingParams{});
    CHECK(cfg.swarm_sizes == std::vector<int>{3, 2, 2, 2, 2, 2, 2});
  }

  TEST_CASE("validation messages name the field") {
    CHECK(starts_with(error_of(R"({"sensing": {"gamma0": 0.95}})"), "sensing.gamma0"));
    CHECK(starts_with(error_of(R"({"fires": [{"center": [1, 1], "a": 10, "b": 20}]})"), "fires[0].a"));
    CHECK(starts_with(error_of(R"({"search": {"brown_step": 200}})"), "search.brown_step"));
    CHECK(starts_with(error_of(R"({"mitigation": {"k_m": 1.0}})"), "mitigation.k_m"));
    CHECK(starts_with(error_of(R"({"sensing": {"bogus": 1}})"), "sensing.bogus"));
    CHECK(starts_with(error_of(""), "config: parse failure"));
    CHECK(starts_with(error_of(R"({"engine": {"strategy": "GREEDY"}})"), "engine.strategy"));
  }

  TEST_CASE("strategy names") {
    for (Strategy s : {Strategy::Mscidc, Strategy::Uniform, Strategy::Normal, Strategy::Levy, Strategy::Oms}) {
      CHECK(parse_strategy(to_string(s)) == s);
    }
    CHECK(parse_strategy("levy") == Strategy::Levy);
    CHECK_FALSE(parse_strategy("GREEDY"));
    CHECK(strategy_names() == "MSCIDC, UNIFORM, NORMAL, LEVY, OMS");
  }

  TEST_CASE("resolve_config reports missing files") {
    CHECK_THROWS_WITH_AS(resolve_config("/nonexistent/x.json"), doctest::Contains("config not found"), ConfigError);
  }
}
