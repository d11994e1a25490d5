#include "awe/scenario.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "awe/errors.hpp"
#include "json.hpp"

namespace awe {

using nlohmann::json;

LinearConfig Scenario::linear_config(const AircraftCase& c) const {
  LinearConfig cfg;
  cfg.travel_length = linear.travel_length;
  cfg.viscous_coeff = c.viscous_coeff;
  cfg.target_height = linear.target_height;
  cfg.climb_speed = linear.climb_speed;
  cfg.props = c.linear_props;
  cfg.storage = vertical.storage;
  return cfg;
}

SimulationConfig Scenario::simulation_config(const AircraftCase& c) const {
  SimulationConfig cfg;
  cfg.plant = c.plant;
  cfg.plant.aircraft_mass = c.aircraft.mass();
  cfg.plant.wing_area = c.aircraft.area();
  cfg.control = c.control;
  cfg.aero = aero;
  cfg.env = env;
  cfg.propellers = c.linear_props;
  cfg.duration = simulation.duration;
  cfg.step = simulation.step;
  cfg.initial_line = simulation.initial_line;
  cfg.initial_position = simulation.initial_position;
  return cfg;
}

void Scenario::validate() const {
  auto guard = [](const std::string& where, auto&& fn) {
    try {
      fn();
    } catch (const DomainError& e) {
      throw ConfigError(where + ": " + e.what());
    }
  };
  guard("environment", [&] { env.validate(); });
  guard("vertical", [&] { vertical.validate(); });
  guard("rotational", [&] { rotational.validate(); });
  if (aircraft.empty()) throw ConfigError("aircraft: at least one aircraft is required");
  for (const auto& c : aircraft) {
    const std::string where = "aircraft '" + c.label + "'";
    guard(where, [&] {
      linear_config(c).validate();
      c.vertical_props.validate();
      simulation_config(c).validate();
    });
  }
}

Scenario paper_preset() {
  Scenario s;
  struct Row {
    double span, cv;
    PlantParams plant;
    ControllerParams control;
  };
  auto plant = [](double j1, double b1, double r1, double j2, double b2, double r2, double ms,
                  double bs, double kt, double rt) {
    PlantParams p;
    p.winch_inertia = j1;
    p.winch_friction = b1;
    p.winch_radius = r1;
    p.slide_inertia = j2;
    p.slide_friction = b2;
    p.pulley_radius = r2;
    p.slide_mass = ms;
    p.rail_friction = bs;
    p.tether_stiffness = kt;
    p.tether_radius = rt;
    return p;
  };
  auto ctrl = [](double k1, double k2, double kt, double wp, double z1, double z2, double c1,
                 double c2, double ft) {
    ControllerParams c;
    c.winch_gain = k1;
    c.slide_gain = k2;
    c.thrust_gain = kt;
    c.pole = wp;
    c.zero1 = z1;
    c.zero2 = z2;
    c.max_winch_torque = c1;
    c.max_slide_torque = c2;
    c.max_thrust = ft;
    return c;
  };
  const Row rows[] = {
      {5.0, 0.1, plant(1.3, 0.001, 0.2, 0.03, 0.001, 0.1, 6.0, 0.1, 1e5, 0.0025),
       ctrl(3.0, 10.0, 100.0, 16.0, 0.2, 1.0, 750.0, 48.0, 80.0)},
      {10.0, 0.3, plant(30.0, 0.002, 0.5, 0.1, 0.002, 0.15, 30.0, 0.3, 9.1e5, 0.0075),
       ctrl(20.0, 50.0, 150.0, 32.0, 0.2, 2.0, 3000.0, 290.0, 350.0)},
      {20.0, 1.0, plant(490.0, 0.003, 1.0, 2.0, 0.003, 0.4, 120.0, 1.0, 2.5e5, 0.0125),
       ctrl(160.0, 200.0, 600.0, 32.0, 0.2, 2.0, 12000.0, 3500.0, 600.0)},
  };
  int index = 1;
  for (const auto& r : rows) {
    const auto ac = Aircraft::from_span(r.span, 10.0, 15.0, 1.0, 0.1);
    AircraftCase c{std::to_string(index++),
                   ac,
                   r.cv,
                   vertical::default_propellers(ac),
                   linear::default_propellers(ac),
                   r.plant,
                   r.control};
    c.plant.aircraft_mass = ac.mass();
    c.plant.wing_area = ac.area();
    s.aircraft.push_back(c);
  }
  return s;
}

namespace {

// Strict reader over one JSON object: every key must be consumed.
class Section {
 public:
  Section(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw ConfigError(path_ + ": expected an object");
  }

  void number(const char* key, double& out) {
    if (const json* v = take(key)) {
      if (!v->is_number()) throw ConfigError(field(key) + ": expected a number");
      out = v->get<double>();
    }
  }

  void integer(const char* key, int& out) {
    if (const json* v = take(key)) {
      if (!v->is_number_integer()) throw ConfigError(field(key) + ": expected an integer");
      out = v->get<int>();
    }
  }

  void boolean(const char* key, bool& out) {
    if (const json* v = take(key)) {
      if (!v->is_boolean()) throw ConfigError(field(key) + ": expected true or false");
      out = v->get<bool>();
    }
  }

  void string(const char* key, std::string& out) {
    if (const json* v = take(key)) {
      if (!v->is_string()) throw ConfigError(field(key) + ": expected a string");
      out = v->get<std::string>();
    }
  }

  // Reads `<base>_deg` or `<base>_rad` into radians.
  void angle(const std::string& base, double& out) {
    const std::string deg = base + "_deg";
    const std::string rad = base + "_rad";
    const json* d = take(deg.c_str());
    const json* r = take(rad.c_str());
    if (d && r) throw ConfigError(path_ + ": give either " + deg + " or " + rad + ", not both");
    if (d) {
      if (!d->is_number()) throw ConfigError(field(deg.c_str()) + ": expected a number");
      out = deg_to_rad(d->get<double>());
    }
    if (r) {
      if (!r->is_number()) throw ConfigError(field(rad.c_str()) + ": expected a number");
      out = r->get<double>();
    }
  }

  const json* take(const char* key) {
    auto it = j_.find(key);
    if (it == j_.end()) return nullptr;
    used_.insert(key);
    return &*it;
  }

  std::string field(const char* key) const { return path_ + "." + key; }
  const std::string& path() const { return path_; }

  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      if (!used_.count(it.key())) throw ConfigError(path_ + ": unknown field '" + it.key() + "'");
    }
  }

 private:
  const json& j_;
  std::string path_;
  std::set<std::string> used_;
};

void read_props(Section& parent, const char* key, PropellerBank& props) {
  if (const json* v = parent.take(key)) {
    Section s(*v, parent.field(key));
    s.integer("count", props.count);
    s.number("diameter", props.diameter);
    s.number("efficiency", props.efficiency);
    s.finish();
  }
}

void read_plant(Section& parent, PlantParams& p) {
  const json* v = parent.take("plant");
  if (!v) return;
  Section s(*v, parent.field("plant"));
  s.number("winch_inertia", p.winch_inertia);
  s.number("winch_friction", p.winch_friction);
  s.number("winch_radius", p.winch_radius);
  s.number("slide_inertia", p.slide_inertia);
  s.number("slide_friction", p.slide_friction);
  s.number("pulley_radius", p.pulley_radius);
  s.number("slide_mass", p.slide_mass);
  s.number("rail_friction", p.rail_friction);
  s.number("tether_stiffness", p.tether_stiffness);
  s.number("tether_radius", p.tether_radius);
  s.number("tether_density", p.tether_density);
  s.number("pitch_bandwidth", p.pitch_bandwidth);
  std::string loop = p.pitch_loop == PitchLoop::AngleTracking ? "angle" : "rate";
  s.string("pitch_loop", loop);
  if (loop == "angle") {
    p.pitch_loop = PitchLoop::AngleTracking;
  } else if (loop == "rate") {
    p.pitch_loop = PitchLoop::RateTracking;
  } else {
    throw ConfigError(s.field("pitch_loop") + ": expected \"angle\" or \"rate\"");
  }
  s.finish();
}

void read_controller(Section& parent, ControllerParams& c) {
  const json* v = parent.take("controller");
  if (!v) return;
  Section s(*v, parent.field("controller"));
  s.number("winch_gain", c.winch_gain);
  s.number("slide_gain", c.slide_gain);
  s.number("thrust_gain", c.thrust_gain);
  s.number("pole", c.pole);
  s.number("zero1", c.zero1);
  s.number("zero2", c.zero2);
  s.number("max_winch_torque", c.max_winch_torque);
  s.number("max_slide_torque", c.max_slide_torque);
  s.number("max_thrust", c.max_thrust);
  s.finish();
}

void read_aero(Section& dyn, Scenario& out, const std::string& base_dir) {
  double trim = out.aero.trim();
  dyn.angle("trim", trim);
  const json* v = dyn.take("aero_table");
  if (!v || v->is_null()) {
    out.aero = AeroTable(out.aero.samples(), trim);
    return;
  }
  if (v->is_string()) {
    std::filesystem::path p(v->get<std::string>());
    if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
    out.aero = AeroTable::load_csv(p.string(), trim);
    return;
  }
  Section s(*v, dyn.field("aero_table"));
  const json* a = s.take("alpha_rad");
  const json* cl = s.take("cl");
  const json* cd = s.take("cd");
  s.finish();
  if (!a || !cl || !cd || !a->is_array() || !cl->is_array() || !cd->is_array() ||
      a->size() != cl->size() || a->size() != cd->size()) {
    throw ConfigError(s.path() + ": expected equal-length arrays alpha_rad, cl, cd");
  }
  std::vector<AeroSample> samples;
  for (std::size_t i = 0; i < a->size(); ++i) {
    if (!(*a)[i].is_number() || !(*cl)[i].is_number() || !(*cd)[i].is_number()) {
      throw ConfigError(s.path() + ": non-numeric entry at index " + std::to_string(i));
    }
    samples.push_back({(*a)[i].get<double>(), (*cl)[i].get<double>(), (*cd)[i].get<double>()});
  }
  try {
    out.aero = AeroTable(std::move(samples), trim);
  } catch (const DomainError& e) {
    throw ConfigError(s.path() + ": " + e.what());
  }
}

AircraftCase read_aircraft(const json& j, const std::string& path, const Scenario& preset,
                           std::size_t index, const ControllerParams& shared) {
  Section s(j, path);
  std::string label = std::to_string(index + 1);
  s.string("label", label);
  // Start from the preset entry with the same label, if any, else the closest index.
  const AircraftCase* base = nullptr;
  for (const auto& c : preset.aircraft) {
    if (c.label == label) base = &c;
  }
  if (!base) base = &preset.aircraft[std::min(index, preset.aircraft.size() - 1)];

  double span = base->aircraft.span();
  double aspect = base->aircraft.aspect_ratio();
  double loading = base->aircraft.wing_loading();
  double cl = base->aircraft.lift_coeff();
  double cd = base->aircraft.drag_coeff();
  s.number("span", span);
  s.number("aspect_ratio", aspect);
  s.number("wing_loading", loading);
  s.number("lift_coeff", cl);
  s.number("drag_coeff", cd);
  std::optional<double> area;
  if (const json* v = s.take("area")) {
    if (!v->is_number()) throw ConfigError(s.field("area") + ": expected a number");
    area = v->get<double>();
  }
  std::optional<Aircraft> ac;
  try {
    ac = area ? Aircraft(span, aspect, *area, loading, cl, cd)
              : Aircraft::from_span(span, aspect, loading, cl, cd);
  } catch (const DomainError& e) {
    throw ConfigError(path + ": " + e.what());
  }
  const bool geometry_changed = !(*ac == base->aircraft);

  AircraftCase c{label,
                 *ac,
                 base->viscous_coeff,
                 geometry_changed ? vertical::default_propellers(*ac) : base->vertical_props,
                 geometry_changed ? linear::default_propellers(*ac) : base->linear_props,
                 base->plant,
                 base->control};
  // Shared control settings apply to every aircraft.
  c.control.target_forward_speed = shared.target_forward_speed;
  c.control.target_climb_speed = shared.target_climb_speed;
  c.control.sample_rate = shared.sample_rate;
  c.control.anti_windup = shared.anti_windup;
  s.number("viscous_coeff", c.viscous_coeff);
  read_props(s, "vertical_propellers", c.vertical_props);
  read_props(s, "linear_propellers", c.linear_props);
  read_plant(s, c.plant);
  read_controller(s, c.control);
  s.finish();
  c.plant.aircraft_mass = c.aircraft.mass();
  c.plant.wing_area = c.aircraft.area();
  return c;
}

json props_json(const PropellerBank& p) {
  return {{"count", p.count}, {"diameter", p.diameter}, {"efficiency", p.efficiency}};
}

}  // namespace

Scenario parse_scenario(const std::string& text, const std::string& base_dir) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
  const Scenario preset = paper_preset();
  Scenario out = preset;
  Section top(root, "scenario");

  if (const json* v = top.take("environment")) {
    Section s(*v, "environment");
    s.number("rho", out.env.rho);
    s.number("g", out.env.g);
    s.number("wind_speed", out.env.wind_speed);
    s.finish();
  }
  if (const json* v = top.take("vertical")) {
    Section s(*v, "vertical");
    s.number("target_height", out.vertical.target_height);
    s.number("climb_speed", out.vertical.climb_speed);
    s.number("battery_energy_density", out.vertical.storage.battery_energy_density);
    s.number("motor_power_density", out.vertical.storage.motor_power_density);
    s.finish();
  }
  if (const json* v = top.take("rotational")) {
    Section s(*v, "rotational");
    auto& r = out.rotational;
    s.angle("zeta_max", r.zeta_max);
    s.number("reel_speed", r.reel_speed);
    s.number("climb_speed", r.climb_speed);
    s.angle("gamma_v_min", r.gamma_v_min_user);
    s.angle("gamma_v_max", r.gamma_v_max);
    s.number("arm_min", r.arm_min);
    s.number("arm_max", r.arm_max);
    s.number("line_max", r.line_max);
    s.integer("line_grid", r.line_grid);
    s.integer("gamma_v_grid", r.gamma_v_grid);
    s.integer("arm_grid", r.arm_grid);
    s.integer("gamma_h_grid", r.gamma_h_grid);
    s.finish();
  }
  if (const json* v = top.take("linear")) {
    Section s(*v, "linear");
    s.number("travel_length", out.linear.travel_length);
    s.number("target_height", out.linear.target_height);
    s.number("climb_speed", out.linear.climb_speed);
    s.finish();
  }
  if (const json* v = top.take("dynamic")) {
    Section s(*v, "dynamic");
    s.number("duration", out.simulation.duration);
    s.number("step", out.simulation.step);
    s.number("initial_line", out.simulation.initial_line);
    s.number("initial_position", out.simulation.initial_position);
    read_aero(s, out, base_dir);
    s.finish();
  }
  ControllerParams shared = preset.aircraft.front().control;
  if (const json* v = top.take("control")) {
    Section s(*v, "control");
    s.number("target_forward_speed", shared.target_forward_speed);
    s.number("target_climb_speed", shared.target_climb_speed);
    s.number("sample_rate", shared.sample_rate);
    s.boolean("anti_windup", shared.anti_windup);
    s.finish();
  }
  if (const json* v = top.take("aircraft")) {
    if (!v->is_array()) throw ConfigError("aircraft: expected an array");
    out.aircraft.clear();
    for (std::size_t i = 0; i < v->size(); ++i) {
      out.aircraft.push_back(
          read_aircraft((*v)[i], "aircraft[" + std::to_string(i) + "]", preset, i, shared));
    }
  } else {
    for (auto& c : out.aircraft) {
      c.control.target_forward_speed = shared.target_forward_speed;
      c.control.target_climb_speed = shared.target_climb_speed;
      c.control.sample_rate = shared.sample_rate;
      c.control.anti_windup = shared.anti_windup;
    }
  }
  top.finish();
  out.validate();
  return out;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  const auto dir = std::filesystem::path(path).parent_path();
  return parse_scenario(buf.str(), dir.empty() ? "." : dir.string());
}

std::string dump_scenario(const Scenario& s) {
  json root;
  root["environment"] = {{"rho", s.env.rho}, {"g", s.env.g}, {"wind_speed", s.env.wind_speed}};
  root["vertical"] = {{"target_height", s.vertical.target_height},
                      {"climb_speed", s.vertical.climb_speed},
                      {"battery_energy_density", s.vertical.storage.battery_energy_density},
                      {"motor_power_density", s.vertical.storage.motor_power_density}};
  const auto& r = s.rotational;
  root["rotational"] = {{"zeta_max_rad", r.zeta_max},
                        {"reel_speed", r.reel_speed},
                        {"climb_speed", r.climb_speed},
                        {"gamma_v_min_rad", r.gamma_v_min_user},
                        {"gamma_v_max_rad", r.gamma_v_max},
                        {"arm_min", r.arm_min},
                        {"arm_max", r.arm_max},
                        {"line_max", r.line_max},
                        {"line_grid", r.line_grid},
                        {"gamma_v_grid", r.gamma_v_grid},
                        {"arm_grid", r.arm_grid},
                        {"gamma_h_grid", r.gamma_h_grid}};
  root["linear"] = {{"travel_length", s.linear.travel_length},
                    {"target_height", s.linear.target_height},
                    {"climb_speed", s.linear.climb_speed}};
  json alpha = json::array(), cl = json::array(), cd = json::array();
  for (const auto& smp : s.aero.samples()) {
    alpha.push_back(smp.alpha);
    cl.push_back(smp.cl);
    cd.push_back(smp.cd);
  }
  root["dynamic"] = {{"duration", s.simulation.duration},
                     {"step", s.simulation.step},
                     {"initial_line", s.simulation.initial_line},
                     {"initial_position", s.simulation.initial_position},
                     {"trim_rad", s.aero.trim()},
                     {"aero_table", {{"alpha_rad", alpha}, {"cl", cl}, {"cd", cd}}}};
  const ControllerParams& shared =
      s.aircraft.empty() ? ControllerParams{} : s.aircraft.front().control;
  root["control"] = {{"target_forward_speed", shared.target_forward_speed},
                     {"target_climb_speed", shared.target_climb_speed},
                     {"sample_rate", shared.sample_rate},
                     {"anti_windup", shared.anti_windup}};
  json list = json::array();
  for (const auto& c : s.aircraft) {
    const auto& p = c.plant;
    const auto& k = c.control;
    list.push_back(
        {{"label", c.label},
         {"span", c.aircraft.span()},
         {"aspect_ratio", c.aircraft.aspect_ratio()},
         {"area", c.aircraft.area()},
         {"wing_loading", c.aircraft.wing_loading()},
         {"lift_coeff", c.aircraft.lift_coeff()},
         {"drag_coeff", c.aircraft.drag_coeff()},
         {"viscous_coeff", c.viscous_coeff},
         {"vertical_propellers", props_json(c.vertical_props)},
         {"linear_propellers", props_json(c.linear_props)},
         {"plant",
          {{"winch_inertia", p.winch_inertia},
           {"winch_friction", p.winch_friction},
           {"winch_radius", p.winch_radius},
           {"slide_inertia", p.slide_inertia},
           {"slide_friction", p.slide_friction},
           {"pulley_radius", p.pulley_radius},
           {"slide_mass", p.slide_mass},
           {"rail_friction", p.rail_friction},
           {"tether_stiffness", p.tether_stiffness},
           {"tether_radius", p.tether_radius},
           {"tether_density", p.tether_density},
           {"pitch_bandwidth", p.pitch_bandwidth},
           {"pitch_loop", p.pitch_loop == PitchLoop::AngleTracking ? "angle" : "rate"}}},
         {"controller",
          {{"winch_gain", k.winch_gain},
           {"slide_gain", k.slide_gain},
           {"thrust_gain", k.thrust_gain},
           {"pole", k.pole},
           {"zero1", k.zero1},
           {"zero2", k.zero2},
           {"max_winch_torque", k.max_winch_torque},
           {"max_slide_torque", k.max_slide_torque},
           {"max_thrust", k.max_thrust}}}});
  }
  root["aircraft"] = list;
  return root.dump(2) + "\n";
}

Scenario select_aircraft(const Scenario& s, const std::string& selector) {
  if (selector == "all") return s;
  Scenario out = s;
  std::size_t idx = 0;
  try {
    std::size_t pos = 0;
    idx = std::stoul(selector, &pos);
    if (pos != selector.size()) throw std::invalid_argument(selector);
  } catch (const std::exception&) {
    throw ConfigError("--aircraft: expected an index or 'all', got '" + selector + "'");
  }
  if (idx < 1 || idx > s.aircraft.size()) {
    throw ConfigError("--aircraft: index " + selector + " out of range (1-" +
                      std::to_string(s.aircraft.size()) + ")");
  }
  out.aircraft = {s.aircraft[idx - 1]};
  return out;
}

}  // namespace awe
