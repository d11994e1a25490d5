#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "awe/core.hpp"
#include "awe/errors.hpp"
#include "awe/linear_static.hpp"
#include "awe/report.hpp"
#include "awe/rotational.hpp"
#include "awe/scenario.hpp"
#include "awe/sim.hpp"
#include "awe/vertical.hpp"

namespace py = pybind11;
using namespace awe;

namespace {

py::object json_loads(const std::string& text) {
  return py::module_::import("json").attr("loads")(text);
}

py::dict summary_dict(const PowerSummary& s) {
  py::dict d;
  d["peak_ground_W"] = s.peak_ground_W;
  d["peak_winch_W"] = s.peak_winch_W;
  d["peak_ground_combined_W"] = s.peak_ground_combined_W;
  d["peak_propeller_W"] = s.peak_propeller_W;
  d["takeoff_time_s"] = s.takeoff_time_s;
  d["takeoff_distance_m"] = s.takeoff_distance_m;
  d["takeoff_speed_ms"] = s.takeoff_speed_ms;
  d["slide_travel_m"] = s.slide_travel_m;
  d["final_climb_speed_ms"] = s.final_climb_speed_ms;
  d["peak_tension_N"] = s.peak_tension_N;
  return d;
}

const AircraftCase& pick(const Scenario& s, std::size_t index) {
  if (index < 1 || index > s.aircraft.size()) throw py::index_error("aircraft index out of range");
  return s.aircraft[index - 1];
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Take-off assessment for rigid-wing airborne wind energy systems";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<InfeasibleError>(m, "InfeasibleError", base.ptr());
  py::register_exception<NonConvergenceError>(m, "NonConvergenceError", base.ptr());

  py::class_<Environment>(m, "Environment")
      .def(py::init([](double rho, double g, double wind) { return Environment{rho, g, wind}; }),
           py::arg("rho") = 1.2, py::arg("g") = 9.81, py::arg("wind_speed") = 15.0)
      .def_readwrite("rho", &Environment::rho)
      .def_readwrite("g", &Environment::g)
      .def_readwrite("wind_speed", &Environment::wind_speed);

  py::class_<Aircraft>(m, "Aircraft")
      .def(py::init(&Aircraft::from_span), py::arg("span"), py::arg("aspect_ratio") = 10.0,
           py::arg("wing_loading") = 15.0, py::arg("lift_coeff") = 1.0,
           py::arg("drag_coeff") = 0.1)
      .def_property_readonly("span", &Aircraft::span)
      .def_property_readonly("area", &Aircraft::area)
      .def_property_readonly("mass", &Aircraft::mass)
      .def_property_readonly("chord", &Aircraft::chord);

  py::class_<PropellerBank>(m, "PropellerBank")
      .def(py::init([](int n, double d, double eta) { return PropellerBank{n, d, eta}; }),
           py::arg("count") = 2, py::arg("diameter") = 1.0, py::arg("efficiency") = 0.7)
      .def_readwrite("count", &PropellerBank::count)
      .def_readwrite("diameter", &PropellerBank::diameter)
      .def_readwrite("efficiency", &PropellerBank::efficiency);

  py::class_<Scenario>(m, "Scenario")
      .def_property_readonly("labels",
                             [](const Scenario& s) {
                               std::vector<std::string> out;
                               for (const auto& c : s.aircraft) out.push_back(c.label);
                               return out;
                             })
      .def("select", &select_aircraft, py::arg("selector"))
      .def("__eq__", [](const Scenario& a, const Scenario& b) { return a == b; });

  m.def("peak_crosswind_power", &peak_crosswind_power, py::arg("env"), py::arg("aircraft"));

  m.def(
      "vertical_assess",
      [](const Environment& env, const Aircraft& ac) {
        const auto r = vertical::assess(env, ac, vertical::default_propellers(ac), VerticalConfig{});
        py::dict d;
        d["peak_onboard_W"] = r.peak_onboard_power;
        d["added_mass_kg"] = r.added_mass;
        d["ground_area_m2"] = r.ground_area;
        return d;
      },
      py::arg("env"), py::arg("aircraft"));

  m.def(
      "linear_assess",
      [](const Environment& env, const Aircraft& ac, double viscous_coeff) {
        LinearConfig cfg;
        cfg.viscous_coeff = viscous_coeff;
        cfg.props = linear::default_propellers(ac);
        const auto r = linear::assess(env, ac, cfg);
        py::dict d;
        d["takeoff_speed_ms"] = r.takeoff_speed;
        d["peak_ground_W"] = r.peak_ground_power;
        d["peak_onboard_W"] = r.peak_onboard_power;
        d["added_mass_kg"] = r.added_mass;
        d["ground_area_m2"] = r.ground_area;
        return d;
      },
      py::arg("env"), py::arg("aircraft"), py::arg("viscous_coeff") = 0.3);

  m.def(
      "optimal_arm",
      [](const Environment& env, const Aircraft& ac) {
        Environment calm = env;
        calm.wind_speed = 0.0;
        const auto r = rotational::optimal_arm(calm, ac, RotationalConfig{});
        py::dict d;
        d["arm_length_m"] = r.arm_length;
        d["power_W"] = r.power;
        d["ground_area_m2"] = r.ground_area;
        d["gamma_v_rad"] = r.profile.gamma_v;
        d["max_omega_rad_s"] = r.profile.max_omega;
        d["max_tip_speed_ms"] = r.profile.max_tip_speed;
        return d;
      },
      py::arg("env"), py::arg("aircraft"), py::call_guard<py::gil_scoped_release>());

  m.def("paper_preset", &paper_preset);
  m.def("parse_scenario", &parse_scenario, py::arg("text"), py::arg("base_dir") = ".");
  m.def("load_scenario", &load_scenario, py::arg("path"));
  m.def("dump_scenario", &dump_scenario, py::arg("scenario"));

  m.def(
      "assess",
      [](const Scenario& s) {
        std::vector<AircraftReport> reports;
        {
          py::gil_scoped_release release;
          reports = awe::assess(s);
        }
        std::ostringstream os;
        write_assess(os, reports, Format::Json);
        return json_loads(os.str());
      },
      py::arg("scenario"));

  m.def(
      "compare",
      [](const Scenario& s) {
        std::vector<ComparisonRow> rows;
        {
          py::gil_scoped_release release;
          rows = awe::compare(s);
        }
        std::ostringstream os;
        write_compare(os, rows, Format::Json);
        return json_loads(os.str());
      },
      py::arg("scenario"));

  m.def(
      "simulate",
      [](const Scenario& s, std::size_t index, std::optional<double> duration) {
        auto cfg = s.simulation_config(pick(s, index));
        if (duration) cfg.duration = *duration;
        Trajectory traj;
        {
          py::gil_scoped_release release;
          traj = sim::run(cfg);
        }
        py::dict out;
        std::vector<double> t;
        std::vector<std::vector<double>> x;
        std::vector<int> mode;
        for (const auto& r : traj.records) {
          t.push_back(r.t);
          x.emplace_back(r.x.begin(), r.x.end());
          mode.push_back(r.mode == Mode::Carried ? 1 : 2);
        }
        out["t"] = t;
        out["x"] = x;
        out["mode"] = mode;
        if (traj.lift_off) {
          out["lift_off_time"] = traj.lift_off->time;
          out["summary"] = summary_dict(sim::power_summary(traj, cfg));
        } else {
          out["lift_off_time"] = py::none();
          out["summary"] = py::none();
        }
        return out;
      },
      py::arg("scenario"), py::arg("index") = 2, py::arg("duration") = py::none());
}
