#include "swarmfire/scenario.hpp"

#include <cctype>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

namespace swarmfire {

using nlohmann::json;

namespace {

constexpr std::string_view kStrategyNames[] = {"MSCIDC", "UNIFORM", "NORMAL", "LEVY", "OMS"};

[[noreturn]] void fail(const std::string &field, const std::string &what) {
  throw ConfigError(field + ": " + what);
}

/// Reads one JSON object, rejecting keys that were never consumed.
class ObjectReader {
 public:
  ObjectReader(const json &obj, std::string path) : obj_(obj), path_(std::move(path)) {
    if (!obj_.is_object()) fail(path_, "expected an object");
  }

  template <class T>
  void read(const char *key, T &out) {
    seen_.insert(key);
    auto it = obj_.find(key);
    if (it == obj_.end()) return;
    try {
      out = it->template get<T>();
    } catch (const json::exception &) {
      fail(field(key), "wrong type");
    }
  }

  const json *child(const char *key) {
    seen_.insert(key);
    auto it = obj_.find(key);
    return it == obj_.end() ? nullptr : &*it;
  }

  std::string field(const char *key) const { return path_.empty() ? key : path_ + "." + key; }

  void finish() const {
    for (const auto &item : obj_.items()) {
      if (!seen_.count(item.key())) fail(field(item.key().c_str()), "unknown key");
    }
  }

 private:
  const json &obj_;
  std::string path_;
  std::set<std::string> seen_;
};

void require_positive(double v, const std::string &field) {
  if (!(v > 0.0) || !std::isfinite(v)) fail(field, "must be strictly positive");
}

Vec2 read_point(const json &j, const std::string &field) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    fail(field, "expected [x, y]");
  return {j[0].get<double>(), j[1].get<double>()};
}

ScenarioConfig from_json(const json &root) {
  ScenarioConfig cfg;
  ObjectReader top(root, "");

  if (const json *area = top.child("search_area")) {
    ObjectReader r(*area, "search_area");
    double x_min = 0.0, y_min = 0.0, width = cfg.search_area.width(), height = cfg.search_area.height();
    r.read("x_min", x_min);
    r.read("y_min", y_min);
    r.read("width", width);
    r.read("height", height);
    r.finish();
    cfg.search_area = {x_min, y_min, x_min + width, y_min + height};
  }

  if (const json *fires = top.child("fires")) {
    if (!fires->is_array()) fail("fires", "expected an array");
    for (std::size_t i = 0; i < fires->size(); ++i) {
      const std::string path = "fires[" + std::to_string(i) + "]";
      ObjectReader r((*fires)[i], path);
      FireSpec spec;
      const json *center = r.child("center");
      if (!center) fail(path + ".center", "missing");
      spec.center = read_point(*center, path + ".center");
      r.read("a", spec.a);
      r.read("b", spec.b);
      r.finish();
      cfg.fires.push_back(spec);
    }
  }

  std::optional<int> declared_total;
  if (const json *swarms = top.child("swarms")) {
    ObjectReader r(*swarms, "swarms");
    r.read("sizes", cfg.swarm_sizes);
    r.read("radius", cfg.swarm_radius);
    int total = -1;
    r.read("total_uavs", total);
    if (r.child("total_uavs")) declared_total = total;
    r.finish();
  }

  if (const json *j = top.child("fuel")) {
    ObjectReader r(*j, "fuel");
    r.read("alpha", cfg.fuel.alpha);
    r.read("beta", cfg.fuel.beta);
    r.read("flame_length", cfg.fuel.flame_length);
    r.read("heat_of_combustion", cfg.fuel.heat_of_combustion);
    r.read("fuel_load", cfg.fuel.fuel_load);
    r.finish();
  }
  if (const json *j = top.child("quench")) {
    ObjectReader r(*j, "quench");
    r.read("c", cfg.quench.c);
    r.read("nu", cfg.quench.nu);
    r.read("water_rate", cfg.quench.water_rate);
    r.finish();
  }
  if (const json *j = top.child("kinematics")) {
    ObjectReader r(*j, "kinematics");
    r.read("cruise_speed", cfg.kinematics.cruise_speed);
    r.read("pole", cfg.kinematics.pole);
    r.read("tau", cfg.kinematics.tau);
    r.finish();
  }
  if (const json *j = top.child("sensing")) {
    ObjectReader r(*j, "sensing");
    r.read("sensing_radius", cfg.sensing.sensing_radius);
    r.read("sigma", cfg.sensing.sigma);
    r.read("gamma", cfg.sensing.gamma);
    r.read("gamma0", cfg.sensing.gamma0);
    r.read("xi", cfg.sensing.xi);
    r.read("sigma_t", cfg.sensing.sigma_t);
    r.read("t_ambient", cfg.sensing.t_ambient);
    r.read("t_fire", cfg.sensing.t_fire);
    r.read("noise_std", cfg.sensing.noise_std);
    r.finish();
  }
  if (const json *j = top.child("search")) {
    ObjectReader r(*j, "search");
    r.read("k_phi", cfg.search.k_phi);
    r.read("k_e", cfg.search.k_e);
    r.read("levy_step", cfg.search.levy_step);
    r.read("brown_step", cfg.search.brown_step);
    r.read("levy_tail_exponent", cfg.search.levy_tail_exponent);
    r.finish();
  }
  if (const json *j = top.child("mitigation")) {
    ObjectReader r(*j, "mitigation");
    r.read("k_m", cfg.mitigation.k_m);
    r.read("delta_theta", cfg.mitigation.delta_theta);
    r.read("v_mit", cfg.mitigation.v_mit);
    r.read("delta_area", cfg.mitigation.delta_area);
    r.read("delta_fires", cfg.mitigation.delta_fires);
    r.read("delta_swarms", cfg.mitigation.delta_swarms);
    r.read("repel_cooldown", cfg.mitigation.repel_cooldown);
    std::string form = "corrected";
    r.read("control_form", form);
    if (form == "corrected") {
      cfg.mitigation.control_form = ControlForm::Corrected;
    } else if (form == "printed") {
      cfg.mitigation.control_form = ControlForm::Printed;
    } else {
      fail("mitigation.control_form", "expected \"corrected\" or \"printed\"");
    }
    r.finish();
  }
  if (const json *j = top.child("objective")) {
    ObjectReader r(*j, "objective");
    r.read("w1", cfg.objective.w1);
    r.read("w2", cfg.objective.w2);
    r.read("w3", cfg.objective.w3);
    r.read("q_tmax", cfg.objective.q_tmax);
    r.finish();
  }
  if (const json *j = top.child("engine")) {
    ObjectReader r(*j, "engine");
    r.read("dt", cfg.engine.dt);
    r.read("t_max", cfg.engine.t_max);
    r.read("base_seed", cfg.engine.base_seed);
    r.read("trace_stride", cfg.engine.trace_stride);
    std::string name{to_string(cfg.engine.strategy)};
    r.read("strategy", name);
    auto s = parse_strategy(name);
    if (!s) fail("engine.strategy", "unknown strategy \"" + name + "\" (valid: " + strategy_names() + ")");
    cfg.engine.strategy = *s;
    r.finish();
  }
  top.finish();

  if (declared_total && *declared_total != cfg.total_uavs())
    fail("swarms.total_uavs", "sum of swarm sizes (" + std::to_string(cfg.total_uavs()) +
                                  ") differs from total_uavs (" + std::to_string(*declared_total) + ")");
  validate(cfg);
  return cfg;
}

std::vector<FireSpec> table1_fires() {
  return {
      {{2000.0, 6000.0}, 300.0, 250.0},
      {{3000.0, 9000.0}, 150.0, 100.0},
      {{4000.0, 3000.0}, 200.0, 200.0},
      {{8000.0, 2000.0}, 100.0, 100.0},
      {{9000.0, 8000.0}, 50.0, 50.0},
  };
}

}  // namespace

std::string_view to_string(Strategy s) { return kStrategyNames[static_cast<int>(s)]; }

std::optional<Strategy> parse_strategy(std::string_view name) {
  std::string upper(name);
  for (char &c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (int i = 0; i < 5; ++i) {
    if (kStrategyNames[i] == upper) return static_cast<Strategy>(i);
  }
  return std::nullopt;
}

std::string strategy_names() {
  std::string out;
  for (auto n : kStrategyNames) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return out;
}

int ScenarioConfig::total_uavs() const { return std::accumulate(swarm_sizes.begin(), swarm_sizes.end(), 0); }

void validate(const ScenarioConfig &cfg) {
  const Rect &area = cfg.search_area;
  if (!(area.width() > 0.0) || !(area.height() > 0.0)) fail("search_area", "width and height must be positive");

  for (std::size_t i = 0; i < cfg.fires.size(); ++i) {
    const std::string path = "fires[" + std::to_string(i) + "]";
    const FireSpec &f = cfg.fires[i];
    if (!(f.b > 0.0)) fail(path + ".b", "must be strictly positive");
    if (f.a < f.b) fail(path + ".a", "a >= b violated");
    if (!area.contains(f.center)) fail(path + ".center", "outside search_area");
  }

  if (cfg.swarm_sizes.empty()) fail("swarms.sizes", "at least one swarm required");
  for (std::size_t i = 0; i < cfg.swarm_sizes.size(); ++i) {
    if (cfg.swarm_sizes[i] < 1) fail("swarms.sizes[" + std::to_string(i) + "]", "must be >= 1");
  }
  require_positive(cfg.swarm_radius, "swarms.radius");

  require_positive(cfg.fuel.alpha, "fuel.alpha");
  require_positive(cfg.fuel.beta, "fuel.beta");
  require_positive(cfg.fuel.flame_length, "fuel.flame_length");
  require_positive(cfg.fuel.heat_of_combustion, "fuel.heat_of_combustion");
  require_positive(cfg.fuel.fuel_load, "fuel.fuel_load");

  require_positive(cfg.quench.c, "quench.c");
  if (!(cfg.quench.nu >= 0.0)) fail("quench.nu", "must be non-negative");
  require_positive(cfg.quench.water_rate, "quench.water_rate");

  require_positive(cfg.kinematics.cruise_speed, "kinematics.cruise_speed");
  require_positive(cfg.kinematics.pole, "kinematics.pole");
  require_positive(cfg.kinematics.tau, "kinematics.tau");

  const SensingParams &s = cfg.sensing;
  require_positive(s.sensing_radius, "sensing.sensing_radius");
  require_positive(s.sigma, "sensing.sigma");
  require_positive(s.sigma_t, "sensing.sigma_t");
  require_positive(s.t_ambient, "sensing.t_ambient");
  if (!(s.gamma > 0.0 && s.gamma <= 1.0)) fail("sensing.gamma", "0 < γ <= 1 violated");
  if (!(s.gamma0 > 0.0)) fail("sensing.gamma0", "0 < γ0 violated");
  if (!(s.gamma0 < s.gamma)) fail("sensing.gamma0", "γ0 < γ violated");
  if (!(s.t_fire > s.t_ambient)) fail("sensing.t_fire", "must exceed t_ambient");
  if (!(s.noise_std >= 0.0)) fail("sensing.noise_std", "must be non-negative");

  const SearchParams &q = cfg.search;
  if (!(q.k_phi > 0.0 && q.k_phi <= kPi)) fail("search.k_phi", "0 < K_phi <= pi violated");
  require_positive(q.k_e, "search.k_e");
  require_positive(q.levy_step, "search.levy_step");
  require_positive(q.brown_step, "search.brown_step");
  require_positive(q.levy_tail_exponent, "search.levy_tail_exponent");
  if (q.levy_step < 5.0 * q.brown_step) fail("search.brown_step", "brown_step << levy_step violated (ratio must be >= 5)");

  const MitigationParams &m = cfg.mitigation;
  if (!(m.k_m < 0.0)) fail("mitigation.k_m", "K_m < 0 violated");
  require_positive(m.delta_theta, "mitigation.delta_theta");
  require_positive(m.v_mit, "mitigation.v_mit");
  if (m.v_mit > cfg.kinematics.cruise_speed) fail("mitigation.v_mit", "must not exceed kinematics.cruise_speed");
  require_positive(m.delta_area, "mitigation.delta_area");
  if (m.delta_fires < 0) fail("mitigation.delta_fires", "must be non-negative");
  if (m.delta_swarms < 1) fail("mitigation.delta_swarms", "must be >= 1");
  if (!(m.repel_cooldown >= 0.0)) fail("mitigation.repel_cooldown", "must be non-negative");

  if (!(cfg.objective.q_tmax > 0.0)) fail("objective.q_tmax", "must be strictly positive");

  require_positive(cfg.engine.dt, "engine.dt");
  require_positive(cfg.engine.t_max, "engine.t_max");
  if (cfg.engine.trace_stride < 1) fail("engine.trace_stride", "must be >= 1");
}

ScenarioConfig parse_config(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error &e) {
    throw ConfigError(std::string("config: parse failure: ") + e.what());
  }
  return from_json(root);
}

ScenarioConfig load_config(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string write_config(const ScenarioConfig &cfg) {
  json fires = json::array();
  for (const auto &f : cfg.fires) fires.push_back({{"center", {f.center.x, f.center.y}}, {"a", f.a}, {"b", f.b}});
  json root = {
      {"search_area",
       {{"x_min", cfg.search_area.x_min},
        {"y_min", cfg.search_area.y_min},
        {"width", cfg.search_area.width()},
        {"height", cfg.search_area.height()}}},
      {"fires", fires},
      {"swarms", {{"sizes", cfg.swarm_sizes}, {"radius", cfg.swarm_radius}, {"total_uavs", cfg.total_uavs()}}},
      {"fuel",
       {{"alpha", cfg.fuel.alpha},
        {"beta", cfg.fuel.beta},
        {"flame_length", cfg.fuel.flame_length},
        {"heat_of_combustion", cfg.fuel.heat_of_combustion},
        {"fuel_load", cfg.fuel.fuel_load}}},
      {"quench", {{"c", cfg.quench.c}, {"nu", cfg.quench.nu}, {"water_rate", cfg.quench.water_rate}}},
      {"kinematics",
       {{"cruise_speed", cfg.kinematics.cruise_speed}, {"pole", cfg.kinematics.pole}, {"tau", cfg.kinematics.tau}}},
      {"sensing",
       {{"sensing_radius", cfg.sensing.sensing_radius},
        {"sigma", cfg.sensing.sigma},
        {"gamma", cfg.sensing.gamma},
        {"gamma0", cfg.sensing.gamma0},
        {"xi", cfg.sensing.xi},
        {"sigma_t", cfg.sensing.sigma_t},
        {"t_ambient", cfg.sensing.t_ambient},
        {"t_fire", cfg.sensing.t_fire},
        {"noise_std", cfg.sensing.noise_std}}},
      {"search",
       {{"k_phi", cfg.search.k_phi},
        {"k_e", cfg.search.k_e},
        {"levy_step", cfg.search.levy_step},
        {"brown_step", cfg.search.brown_step},
        {"levy_tail_exponent", cfg.search.levy_tail_exponent}}},
      {"mitigation",
       {{"k_m", cfg.mitigation.k_m},
        {"delta_theta", cfg.mitigation.delta_theta},
        {"v_mit", cfg.mitigation.v_mit},
        {"delta_area", cfg.mitigation.delta_area},
        {"delta_fires", cfg.mitigation.delta_fires},
        {"delta_swarms", cfg.mitigation.delta_swarms},
        {"repel_cooldown", cfg.mitigation.repel_cooldown},
        {"control_form", cfg.mitigation.control_form == ControlForm::Corrected ? "corrected" : "printed"}}},
      {"objective",
       {{"w1", cfg.objective.w1}, {"w2", cfg.objective.w2}, {"w3", cfg.objective.w3}, {"q_tmax", cfg.objective.q_tmax}}},
      {"engine",
       {{"dt", cfg.engine.dt},
        {"t_max", cfg.engine.t_max},
        {"base_seed", cfg.engine.base_seed},
        {"strategy", to_string(cfg.engine.strategy)},
        {"trace_stride", cfg.engine.trace_stride}}},
  };
  return root.dump(2);
}

std::optional<ScenarioConfig> preset(std::string_view name) {
  ScenarioConfig cfg;
  cfg.fires = table1_fires();
  if (name == "pine-table1" || name == "pine-table1-s7") {
    cfg.swarm_sizes = {3, 2, 2, 2, 2, 2, 2};
  } else if (name == "pine-table1-s6") {
    cfg.swarm_sizes = {3, 3, 3, 2, 2, 2};
  } else if (name == "pine-table1-s5") {
    cfg.swarm_sizes = {3, 3, 3, 3, 3};
  } else if (name == "pine-table1-s3") {
    cfg.swarm_sizes = {5, 5, 5};
  } else {
    return std::nullopt;
  }
  return cfg;
}

std::vector<std::string> preset_names() {
  return {"pine-table1", "pine-table1-s3", "pine-table1-s5", "pine-table1-s6", "pine-table1-s7"};
}

ScenarioConfig resolve_config(const std::string &name_or_path) {
  if (auto p = preset(name_or_path)) return *p;
  if (!std::filesystem::exists(name_or_path)) throw ConfigError("config: config not found: " + name_or_path);
  return load_config(name_or_path);
}

}  // namespace swarmfire
