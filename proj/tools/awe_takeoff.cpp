// awe-takeoff: assessment, sweeps, simulation and comparison of the
// take-off concepts. Exit codes: 0 success, 2 configuration error,
// 3 numerical failure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "awe/errors.hpp"
#include "awe/report.hpp"
#include "awe/scenario.hpp"

namespace fs = std::filesystem;
using namespace awe;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct Options {
  std::string preset = "paper";
  std::string config;
  std::string format = "text";
  std::string out;
  std::string aircraft = "all";
  bool dump_config = false;
  double duration = 0.0;  // simulate override when > 0
  double line = 1.0;      // rotational-sweep line length [m]
};

Scenario load(const Options& o) {
  if (o.preset != "paper") throw ConfigError("unknown preset '" + o.preset + "'");
  Scenario s = o.config.empty() ? paper_preset() : load_scenario(o.config);
  s = select_aircraft(s, o.aircraft);
  if (o.duration > 0.0) s.simulation.duration = o.duration;
  s.validate();
  return s;
}

fs::path out_dir(const Options& o) {
  fs::path dir = o.out.empty() ? fs::path(".") : fs::path(o.out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ConfigError("cannot create output directory '" + dir.string() + "'");
  return dir;
}

std::ofstream open_out(const fs::path& p) {
  std::ofstream f(p);
  if (!f) throw ConfigError("cannot write '" + p.string() + "'");
  return f;
}

const char* extension(Format f) {
  switch (f) {
    case Format::Json: return ".json";
    case Format::Csv: return ".csv";
    default: return ".txt";
  }
}

// Prints to stdout and mirrors into <out>/<stem><ext> when --out is set.
template <typename Writer>
void emit(const Options& o, Format f, const std::string& stem, Writer&& write) {
  std::ostringstream buf;
  write(buf);
  std::cout << buf.str();
  if (!o.out.empty()) open_out(out_dir(o) / (stem + extension(f))) << buf.str();
}

int cmd_assess(const Options& o) {
  const Scenario s = load(o);
  const Format f = parse_format(o.format);
  const auto reports = assess(s);
  emit(o, f, "assess", [&](std::ostream& os) { write_assess(os, reports, f); });
  return 0;
}

std::string tag(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

int cmd_rotational_sweep(const Options& o) {
  const Scenario s = load(o);
  const fs::path dir = out_dir(o);
  Environment still = s.env;
  still.wind_speed = 0.0;
  const auto& cfg = s.rotational;
  const auto lines = rotational::line_grid(cfg);
  std::vector<std::string> written;

  for (const auto& c : s.aircraft) {
    const std::string d = tag(c.aircraft.span());
    // Maximum reachable inclination against line length, three (w_l, R) pairs.
    const std::pair<double, double> cases[] = {{15.0, 10.0}, {15.0, 40.0}, {30.0, 40.0}};
    for (const auto& [wl, arm] : cases) {
      const auto ac = Aircraft(c.aircraft.span(), c.aircraft.aspect_ratio(), c.aircraft.area(), wl,
                               c.aircraft.lift_coeff(), c.aircraft.drag_coeff());
      const auto curve = rotational::max_gamma_curve(still, ac, cfg, arm, lines);
      const fs::path p = dir / ("max_gamma_d" + d + "_wl" + tag(wl) + "_R" + tag(arm) + ".csv");
      auto f = open_out(p);
      f << "R_m,l_m,gammaV_max_deg,feasible\n";
      f.precision(17);
      for (const auto& pt : curve) {
        f << arm << ',' << pt.line_length << ',';
        if (pt.gamma_v_max) {
          f << rad_to_deg(*pt.gamma_v_max) << ",1\n";
        } else {
          f << "nan,0\n";
        }
      }
      written.push_back(p.string());
    }
    // Power against arm length at the minimum inclination.
    {
      const auto rows =
          rotational::power_vs_arm(still, c.aircraft, cfg, o.line, cfg.gamma_v_min(),
                                   rotational::arm_grid(cfg));
      const fs::path p = dir / ("power_vs_arm_d" + d + ".csv");
      auto f = open_out(p);
      rotational::write_sweep_csv(f, rows);
      written.push_back(p.string());
    }
    // Power against inclination at the largest arm.
    {
      const auto rows = rotational::power_vs_gamma(still, c.aircraft, cfg, cfg.arm_max, o.line,
                                                   rotational::gamma_v_grid(cfg));
      const fs::path p = dir / ("power_vs_gamma_d" + d + ".csv");
      auto f = open_out(p);
      rotational::write_sweep_csv(f, rows);
      written.push_back(p.string());
    }
  }
  for (const auto& w : written) std::cout << w << '\n';
  return 0;
}

int cmd_simulate(const Options& o) {
  const Scenario s = load(o);
  const Format f = parse_format(o.format);
  const fs::path dir = out_dir(o);
  int status = 0;
  for (const auto& c : s.aircraft) {
    const auto cfg = s.simulation_config(c);
    const fs::path traj_path = dir / ("trajectory_" + c.label + ".csv");
    try {
      const auto traj = sim::run(cfg);
      auto file = open_out(traj_path);
      sim::write_csv(file, traj);
      std::optional<PowerSummary> summary;
      if (traj.lift_off) summary = sim::power_summary(traj, cfg);
      write_simulation_summary(std::cout, c.label, summary, cfg.duration, f);
    } catch (const SimulationDivergedError& e) {
      auto file = open_out(traj_path);
      sim::write_csv(file, e.partial());
      std::cerr << "aircraft " << c.label << ": " << e.what() << " (partial trajectory in "
                << traj_path.string() << ")\n";
      status = kExitNumerical;
    }
  }
  return status;
}

int cmd_compare(const Options& o) {
  const Scenario s = load(o);
  const Format f = parse_format(o.format);
  const auto rows = compare(s);
  emit(o, f, "compare", [&](std::ostream& os) { write_compare(os, rows, f); });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Take-off assessment and simulation for rigid-wing airborne wind energy systems"};
  app.require_subcommand(0, 1);
  Options o;
  app.add_option("--preset", o.preset, "Built-in parameter set")->check(CLI::IsMember({"paper"}));
  app.add_option("--config", o.config, "JSON scenario file applied on top of the preset");
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", o.out, "Output directory");
  app.add_option("--aircraft", o.aircraft, "Aircraft index (1, 2, 3) or all");
  app.add_flag("--dump-config", o.dump_config, "Print the effective scenario as JSON and exit");

  auto* assess_cmd = app.add_subcommand("assess", "Static assessment of the three concepts");
  auto* sweep_cmd = app.add_subcommand("rotational-sweep", "Rotational take-off sweep tables");
  sweep_cmd->add_option("--line", o.line, "Line length for the power sweeps [m]");
  auto* sim_cmd = app.add_subcommand("simulate", "Simulate the linear take-off");
  sim_cmd->add_option("--duration", o.duration, "Simulated time [s]");
  auto* compare_cmd = app.add_subcommand("compare", "Static vs simulated peak powers");
  for (auto* sub : {assess_cmd, sweep_cmd, sim_cmd, compare_cmd}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (o.dump_config) {
      std::cout << dump_scenario(load(o));
      return 0;
    }
    if (assess_cmd->parsed()) return cmd_assess(o);
    if (sweep_cmd->parsed()) return cmd_rotational_sweep(o);
    if (sim_cmd->parsed()) return cmd_simulate(o);
    if (compare_cmd->parsed()) return cmd_compare(o);
    std::cerr << app.help();
    return kExitConfig;
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const DomainError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << " (binding: " << e.binding_constraint() << ")\n";
    return kExitNumerical;
  } catch (const Error& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
}
