#include "awe/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "awe/errors.hpp"
#include "awe/parallel.hpp"
#include "json.hpp"

namespace awe {

using nlohmann::json;

Format parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw ConfigError("unknown format '" + name + "' (expected text, json or csv)");
}

std::string format_sig3(double v) {
  if (!std::isfinite(v)) return "nan";
  if (v == 0.0) return "0";
  const int mag = static_cast<int>(std::floor(std::log10(std::abs(v))));
  const int digits = std::max(0, 2 - mag);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

namespace {

constexpr const char* kUndefined = "undefined";

void attach_criteria(ConceptResult& c, const Aircraft& ac, const Environment& env) {
  if (!c.feasible) return;
  try {
    c.criteria = criteria_from_assessment(c.peak_ground_W, c.peak_onboard_W, c.added_mass_kg,
                                          c.ground_area_m2, c.area_floor_m2, ac, env);
  } catch (const DomainError&) {
    c.criteria.reset();
  }
}

AircraftReport assess_one(const Scenario& s, const AircraftCase& c) {
  const Aircraft& ac = c.aircraft;
  AircraftReport r;
  r.label = c.label;
  r.span = ac.span();
  r.area = ac.area();
  r.mass = ac.mass();
  r.peak_crosswind_W = peak_crosswind_power(s.env, ac);

  r.vertical = vertical::assess(s.env, ac, c.vertical_props, s.vertical);
  ConceptResult v;
  v.name = "vertical";
  v.peak_onboard_W = r.vertical.peak_onboard_power;
  v.added_mass_kg = r.vertical.added_mass;
  v.ground_area_m2 = r.vertical.ground_area;
  attach_criteria(v, ac, s.env);

  ConceptResult rot;
  rot.name = "rotational";
  try {
    // Zero absolute wind during the rotational launch.
    Environment still = s.env;
    still.wind_speed = 0.0;
    r.rotational = rotational::optimal_arm(still, ac, s.rotational);
    rot.peak_ground_W = r.rotational->power;
    rot.ground_area_m2 = r.rotational->ground_area;
    rot.area_floor_m2 = r.rotational->ground_area;
  } catch (const InfeasibleError& e) {
    rot.feasible = false;
    rot.note = std::string(e.what()) + " (binding: " + e.binding_constraint() + ")";
  }
  attach_criteria(rot, ac, s.env);

  r.linear = linear::assess(s.env, ac, s.linear_config(c));
  ConceptResult lin;
  lin.name = "linear";
  lin.peak_ground_W = r.linear.peak_ground_power;
  lin.peak_onboard_W = r.linear.peak_onboard_power;
  lin.added_mass_kg = r.linear.added_mass;
  lin.ground_area_m2 = r.linear.ground_area;
  lin.area_floor_m2 = kPi * s.linear.travel_length * s.linear.travel_length / 4.0;
  attach_criteria(lin, ac, s.env);

  r.concepts = {v, rot, lin};
  return r;
}

json number_or_undefined(const std::optional<double>& v) {
  if (v && std::isfinite(*v)) return *v;
  return kUndefined;
}

}  // namespace

std::vector<AircraftReport> assess(const Scenario& s) {
  s.validate();
  std::vector<AircraftReport> out;
  out.reserve(s.aircraft.size());
  // The rotational sweep parallelizes internally over arm lengths.
  for (const auto& c : s.aircraft) out.push_back(assess_one(s, c));
  return out;
}

void write_assess(std::ostream& os, const std::vector<AircraftReport>& reports, Format f) {
  if (f == Format::Json) {
    json arr = json::array();
    for (const auto& r : reports) {
      json concepts = json::array();
      for (const auto& c : r.concepts) {
        json j = {{"concept", c.name}, {"feasible", c.feasible}};
        if (!c.feasible) j["note"] = c.note;
        j["peak_ground_W"] = c.peak_ground_W;
        j["peak_onboard_W"] = c.peak_onboard_W;
        j["added_mass_kg"] = c.added_mass_kg;
        j["ground_area_m2"] = c.ground_area_m2;
        j["area_floor_m2"] = c.area_floor_m2;
        if (c.criteria) {
          j["criteria"] = {{"eta_ground_power", c.criteria->eta_ground_power},
                           {"eta_onboard_power", c.criteria->eta_onboard_power},
                           {"eta_mass", c.criteria->eta_mass},
                           {"eta_area", c.criteria->eta_area}};
        } else {
          j["criteria"] = kUndefined;
        }
        concepts.push_back(j);
      }
      json a = {{"aircraft", r.label},
                {"span_m", r.span},
                {"area_m2", r.area},
                {"mass_kg", r.mass},
                {"peak_crosswind_W", r.peak_crosswind_W},
                {"takeoff_speed_ms", r.linear.takeoff_speed},
                {"concepts", concepts}};
      if (r.rotational) {
        const auto& p = r.rotational->profile;
        a["rotational"] = {{"arm_length_m", r.rotational->arm_length},
                           {"gamma_v_deg", rad_to_deg(p.gamma_v)},
                           {"max_omega_rad_s", p.max_omega},
                           {"max_tip_speed_ms", p.max_tip_speed},
                           {"critical_line_m", p.critical.line_length}};
      }
      arr.push_back(a);
    }
    os << json{{"assessment", arr}}.dump(2) << '\n';
    return;
  }
  if (f == Format::Csv) {
    os << "aircraft,concept,feasible,peak_ground_W,peak_onboard_W,added_mass_kg,ground_area_m2,"
          "area_floor_m2,eta_ground_power,eta_onboard_power,eta_mass,eta_area\n";
    const auto old = os.precision(17);
    for (const auto& r : reports) {
      for (const auto& c : r.concepts) {
        os << r.label << ',' << c.name << ',' << (c.feasible ? 1 : 0) << ',' << c.peak_ground_W
           << ',' << c.peak_onboard_W << ',' << c.added_mass_kg << ',' << c.ground_area_m2 << ','
           << c.area_floor_m2;
        if (c.criteria) {
          os << ',' << c.criteria->eta_ground_power << ',' << c.criteria->eta_onboard_power << ','
             << c.criteria->eta_mass << ',' << c.criteria->eta_area;
        } else {
          for (int i = 0; i < 4; ++i) os << ',' << kUndefined;
        }
        os << '\n';
      }
    }
    os.precision(old);
    return;
  }
  for (const auto& r : reports) {
    os << "Aircraft " << r.label << ": span " << format_sig3(r.span) << " m, area "
       << format_sig3(r.area) << " m^2, mass " << format_sig3(r.mass) << " kg\n";
    os << "  peak crosswind power       " << format_sig3(r.peak_crosswind_W / 1e3) << " kW\n";
    os << "  take-off speed (linear)    " << format_sig3(r.linear.takeoff_speed) << " m/s\n";
    if (r.rotational) {
      const auto& p = r.rotational->profile;
      os << "  rotational: R_opt " << format_sig3(r.rotational->arm_length) << " m, gamma_V "
         << format_sig3(rad_to_deg(p.gamma_v)) << " deg, max omega " << format_sig3(p.max_omega)
         << " rad/s, tip speed " << format_sig3(p.max_tip_speed) << " m/s\n";
    }
    os << "  concept      P_ground[kW]  P_onboard[kW]  dm[kg]  A_g[m^2]  eta_Pg[%]  eta_Pob[%]"
          "  eta_m[%]  eta_Ag[%]\n";
    for (const auto& c : r.concepts) {
      char line[256];
      std::snprintf(line, sizeof line, "  %-11s", c.name.c_str());
      os << line;
      if (!c.feasible) {
        os << "  infeasible: " << c.note << '\n';
        continue;
      }
      std::snprintf(line, sizeof line, "  %12s  %13s  %6s  %8s",
                    format_sig3(c.peak_ground_W / 1e3).c_str(),
                    format_sig3(c.peak_onboard_W / 1e3).c_str(),
                    format_sig3(c.added_mass_kg).c_str(), format_sig3(c.ground_area_m2).c_str());
      os << line;
      if (c.criteria) {
        std::snprintf(line, sizeof line, "  %9s  %10s  %8s  %9s",
                      format_sig3(100.0 * c.criteria->eta_ground_power).c_str(),
                      format_sig3(100.0 * c.criteria->eta_onboard_power).c_str(),
                      format_sig3(100.0 * c.criteria->eta_mass).c_str(),
                      format_sig3(100.0 * c.criteria->eta_area).c_str());
        os << line;
      } else {
        os << "  criteria " << kUndefined << " (peak crosswind power is zero)";
      }
      os << '\n';
    }
    os << '\n';
  }
}

std::vector<ComparisonRow> compare(const Scenario& s) {
  s.validate();
  return parallel_map(s.aircraft.size(), [&](std::size_t i) {
    const auto& c = s.aircraft[i];
    ComparisonRow row;
    row.label = c.label;
    row.peak_crosswind_W = peak_crosswind_power(s.env, c.aircraft);
    const auto lin = linear::assess(s.env, c.aircraft, s.linear_config(c));
    row.static_ground_W = lin.peak_ground_power;
    row.static_propeller_W = lin.peak_onboard_power;
    const auto cfg = s.simulation_config(c);
    const auto traj = sim::run(cfg);
    if (!traj.lift_off) {
      throw SimulationDivergedError("aircraft " + c.label + " never left the slide", traj);
    }
    row.simulated = sim::power_summary(traj, cfg);
    return row;
  });
}

void write_compare(std::ostream& os, const std::vector<ComparisonRow>& rows, Format f) {
  auto pct = [](double p, double ref) -> std::optional<double> {
    if (!(ref > 0.0)) return std::nullopt;
    return 100.0 * p / ref;
  };
  if (f == Format::Json) {
    json arr = json::array();
    for (const auto& r : rows) {
      const auto& s = r.simulated;
      arr.push_back({{"aircraft", r.label},
                     {"peak_crosswind_W", r.peak_crosswind_W},
                     {"ground_static_W", r.static_ground_W},
                     {"ground_simulated_W", s.peak_ground_W},
                     {"ground_simulated_winch_W", s.peak_winch_W},
                     {"ground_simulated_combined_W", s.peak_ground_combined_W},
                     {"propeller_static_W", r.static_propeller_W},
                     {"propeller_simulated_W", s.peak_propeller_W},
                     {"ground_static_pct", number_or_undefined(pct(r.static_ground_W, r.peak_crosswind_W))},
                     {"ground_simulated_pct", number_or_undefined(pct(s.peak_ground_W, r.peak_crosswind_W))},
                     {"propeller_static_pct", number_or_undefined(pct(r.static_propeller_W, r.peak_crosswind_W))},
                     {"propeller_simulated_pct", number_or_undefined(pct(s.peak_propeller_W, r.peak_crosswind_W))}});
    }
    os << json{{"comparison", arr}}.dump(2) << '\n';
    return;
  }
  if (f == Format::Csv) {
    os << "aircraft,peak_crosswind_W,ground_static_W,ground_simulated_W,propeller_static_W,"
          "propeller_simulated_W\n";
    const auto old = os.precision(17);
    for (const auto& r : rows) {
      os << r.label << ',' << r.peak_crosswind_W << ',' << r.static_ground_W << ','
         << r.simulated.peak_ground_W << ',' << r.static_propeller_W << ','
         << r.simulated.peak_propeller_W << '\n';
    }
    os.precision(old);
    return;
  }
  auto cell = [&](double p, double ref) {
    const auto q = pct(p, ref);
    std::string s = format_sig3(p / 1e3);
    s += q ? " (" + format_sig3(*q) + "%)" : std::string(" (") + kUndefined + ")";
    return s;
  };
  os << "Peak power, static model vs simulation [kW] (share of peak crosswind power)\n";
  char line[256];
  std::snprintf(line, sizeof line, "%-26s", "");
  os << line;
  for (const auto& r : rows) {
    std::snprintf(line, sizeof line, "  %18s", ("aircraft " + r.label).c_str());
    os << line;
  }
  os << '\n';
  const struct {
    const char* name;
    double ComparisonRow::*field;
    double PowerSummary::*sim;
  } rows_def[] = {
      {"ground motor - static", &ComparisonRow::static_ground_W, nullptr},
      {"ground motor - simulated", nullptr, &PowerSummary::peak_ground_W},
      {"propeller - static", &ComparisonRow::static_propeller_W, nullptr},
      {"propeller - simulated", nullptr, &PowerSummary::peak_propeller_W},
  };
  for (const auto& d : rows_def) {
    std::snprintf(line, sizeof line, "%-26s", d.name);
    os << line;
    for (const auto& r : rows) {
      const double v = d.field ? r.*(d.field) : r.simulated.*(d.sim);
      std::snprintf(line, sizeof line, "  %18s", cell(v, r.peak_crosswind_W).c_str());
      os << line;
    }
    os << '\n';
  }
}

void write_simulation_summary(std::ostream& os, const std::string& label,
                              const std::optional<PowerSummary>& summary, double duration,
                              Format f) {
  if (f == Format::Json) {
    json j = {{"aircraft", label}, {"duration_s", duration}, {"airborne", summary.has_value()}};
    if (summary) {
      const auto& s = *summary;
      j["peak_ground_W"] = s.peak_ground_W;
      j["peak_winch_W"] = s.peak_winch_W;
      j["peak_ground_combined_W"] = s.peak_ground_combined_W;
      j["peak_propeller_W"] = s.peak_propeller_W;
      j["takeoff_time_s"] = s.takeoff_time_s;
      j["takeoff_distance_m"] = s.takeoff_distance_m;
      j["takeoff_speed_ms"] = s.takeoff_speed_ms;
      j["slide_travel_m"] = s.slide_travel_m;
      j["final_climb_speed_ms"] = s.final_climb_speed_ms;
      j["peak_tension_N"] = s.peak_tension_N;
    }
    os << j.dump(2) << '\n';
    return;
  }
  if (f == Format::Csv) {
    os << "aircraft,airborne,peak_ground_W,peak_winch_W,peak_propeller_W,takeoff_time_s,"
          "takeoff_distance_m,takeoff_speed_ms,slide_travel_m,final_climb_speed_ms,"
          "peak_tension_N\n";
    os << label << ',' << (summary ? 1 : 0);
    const auto old = os.precision(17);
    if (summary) {
      const auto& s = *summary;
      os << ',' << s.peak_ground_W << ',' << s.peak_winch_W << ',' << s.peak_propeller_W << ','
         << s.takeoff_time_s << ',' << s.takeoff_distance_m << ',' << s.takeoff_speed_ms << ','
         << s.slide_travel_m << ',' << s.final_climb_speed_ms << ',' << s.peak_tension_N;
    } else {
      os << ",,,,,,,,,";
    }
    os << '\n';
    os.precision(old);
    return;
  }
  os << "Aircraft " << label << " (" << format_sig3(duration) << " s simulated)\n";
  if (!summary) {
    os << "  status: not airborne (no lift-off within the horizon)\n";
    return;
  }
  const auto& s = *summary;
  os << "  lift-off            t = " << format_sig3(s.takeoff_time_s) << " s at x = "
     << format_sig3(s.takeoff_distance_m) << " m, speed " << format_sig3(s.takeoff_speed_ms)
     << " m/s\n";
  os << "  slide travel        " << format_sig3(s.slide_travel_m) << " m\n";
  os << "  peak slide motor    " << format_sig3(s.peak_ground_W / 1e3) << " kW\n";
  os << "  peak winch motor    " << format_sig3(s.peak_winch_W / 1e3) << " kW\n";
  os << "  peak propeller      " << format_sig3(s.peak_propeller_W / 1e3) << " kW\n";
  os << "  final climb speed   " << format_sig3(s.final_climb_speed_ms) << " m/s\n";
  os << "  peak tether tension " << format_sig3(s.peak_tension_N) << " N\n";
}

}  // namespace awe
