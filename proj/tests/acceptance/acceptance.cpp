// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Details of every sub-check follow each line.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <random>
#include <string>
#include <vector>

#include "awe/core.hpp"
#include "awe/linear_static.hpp"
#include "awe/report.hpp"
#include "awe/rotational.hpp"
#include "awe/scenario.hpp"
#include "awe/sim.hpp"
#include "awe/vertical.hpp"
#include "oracles.hpp"

using namespace awe;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> lines;

  void check(bool ok, const std::string& what) {
    pass = pass && ok;
    lines.push_back(std::string(ok ? "ok   " : "miss ") + what);
  }
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

bool within_rel(double v, double ref, double tol) { return std::abs(v - ref) <= tol * std::abs(ref); }

void check_rel(Outcome& o, const std::string& name, double v, double ref, double tol) {
  o.check(within_rel(v, ref, tol),
          fmt("%s = %.4g (ref %.4g, %+.2f%%, tol %.3g%%)", name.c_str(), v, ref,
              100.0 * (v - ref) / ref, 100.0 * tol));
}

void check_abs(Outcome& o, const std::string& name, double v, double ref, double tol) {
  o.check(std::abs(v - ref) <= tol, fmt("%s = %.4g (ref %.4g +- %.3g)", name.c_str(), v, ref, tol));
}

const Scenario& preset() {
  static const Scenario s = paper_preset();
  return s;
}

// Every rotational solution handed out by the library during this run is
// collected here and re-checked under criterion 7.
std::vector<std::pair<RotationalEquilibrium, Aircraft>>& returned_solutions() {
  static std::vector<std::pair<RotationalEquilibrium, Aircraft>> v;
  return v;
}

void keep(const std::optional<RotationalEquilibrium>& e, const Aircraft& ac) {
  if (e) returned_solutions().emplace_back(*e, ac);
}

Environment calm() {
  Environment env = preset().env;
  env.wind_speed = 0.0;
  return env;
}

// Results shared between criteria so that expensive runs happen once.
std::vector<ArmOptimum> arm_optima;
std::vector<Trajectory> preset_runs;
std::vector<PowerSummary> preset_summaries;

Outcome crosswind_power() {
  Outcome o;
  const double ref[] = {75e3, 300e3, 1200e3};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& ac = preset().aircraft[i].aircraft;
    check_rel(o, fmt("P* %s [W]", preset().aircraft[i].label.c_str()),
              peak_crosswind_power(preset().env, ac), ref[i], 1e-3);
  }
  return o;
}

Outcome vertical_takeoff() {
  Outcome o;
  const double p[] = {14e3, 56e3, 223e3}, m[] = {8, 30, 120}, a[] = {20, 80, 315};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& c = preset().aircraft[i];
    const auto v = vertical::assess(preset().env, c.aircraft, c.vertical_props, preset().vertical);
    check_rel(o, "P_ob " + c.label + " [W]", v.peak_onboard_power, p[i], 0.05);
    check_rel(o, "dm " + c.label + " [kg]", v.added_mass, m[i], 0.05);
    check_rel(o, "A_g " + c.label + " [m2]", v.ground_area, a[i], 0.05);
  }
  return o;
}

Outcome linear_takeoff() {
  Outcome o;
  const double pg[] = {8e3, 31e3, 124e3}, pob[] = {2e3, 9e3, 37e3}, dm[] = {2, 5, 20},
               ag[] = {132, 192, 428};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& c = preset().aircraft[i];
    const auto l = linear::assess(preset().env, c.aircraft, preset().linear_config(c));
    check_abs(o, "v* " + c.label + " [m/s]", l.takeoff_speed, 15.7, 0.4);
    check_rel(o, "P_g " + c.label + " [W]", l.peak_ground_power, pg[i], 0.15);
    check_rel(o, "P_ob " + c.label + " [W]", l.peak_onboard_power, pob[i], 0.15);
    check_abs(o, "dm " + c.label + " [kg]", l.added_mass, dm[i], 1.0 + 0.2 * dm[i]);
    check_rel(o, "A_g " + c.label + " [m2]", l.ground_area, ag[i], 0.02);
  }
  return o;
}

Outcome rotational_takeoff() {
  Outcome o;
  const double pg[] = {3e3, 12e3, 47e3};
  const auto t0 = std::chrono::steady_clock::now();
  arm_optima.clear();
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& c = preset().aircraft[i];
    arm_optima.push_back(rotational::optimal_arm(calm(), c.aircraft, preset().rotational));
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& c = preset().aircraft[i];
    const auto& r = arm_optima[i];
    for (const auto& p : r.per_arm) {
      if (p) keep(p->critical, c.aircraft);
    }
    check_rel(o, "P_g2 " + c.label + " [W]", r.power, pg[i], 0.20);
    check_abs(o, "R_opt " + c.label + " [m]", r.arm_length, 50.0, 1e-9);
    check_rel(o, "omega " + c.label + " [rad/s]", r.profile.max_omega, 0.4, 0.15);
    check_rel(o, "tip speed " + c.label + " [m/s]", r.profile.max_tip_speed, 20.0, 0.15);
    o.check(r.ground_area == kPi * r.arm_length * r.arm_length,
            fmt("A_g2 %s = %.6g = pi R_opt^2", c.label.c_str(), r.ground_area));
  }
  const auto& mid = preset().aircraft[1];
  const auto rmin = rotational::min_feasible_arm(calm(), mid.aircraft, preset().rotational,
                                                 deg_to_rad(40.0), 5.0, 80.0);
  o.check(rmin && std::abs(*rmin - 30.0) <= 5.0,
          rmin ? fmt("min feasible arm at gamma_V = 40 deg = %.1f m (ref 30 +- 5)", *rmin)
               : std::string("min feasible arm at gamma_V = 40 deg: none in [5, 80] m"));
  o.check(seconds < 60.0, fmt("full sweep for three aircraft took %.1f s (limit 60 s)", seconds));
  return o;
}

void run_presets() {
  if (!preset_runs.empty()) return;
  for (const auto& c : preset().aircraft) {
    const auto cfg = preset().simulation_config(c);
    preset_runs.push_back(sim::run(cfg));
    preset_summaries.push_back(sim::power_summary(preset_runs.back(), cfg));
  }
}

Outcome reference_simulation() {
  Outcome o;
  const auto& c = preset().aircraft[1];
  const auto cfg = preset().simulation_config(c);
  const auto t0 = std::chrono::steady_clock::now();
  const auto traj = sim::run(cfg);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const auto s = sim::power_summary(traj, cfg);
  check_abs(o, "lift-off distance [m]", s.takeoff_distance_m, 12.4, 1.0);
  check_abs(o, "slide travel [m]", s.slide_travel_m, 15.0, 1.0);
  check_abs(o, "lift-off speed [m/s]", s.takeoff_speed_ms, 15.7, 0.5);
  check_rel(o, "peak ground power [W]", s.peak_ground_W, 30e3, 0.15);
  check_rel(o, "peak propeller power [W]", s.peak_propeller_W, 13e3, 0.20);
  check_abs(o, "steady vertical speed [m/s]", s.final_climb_speed_ms, 1.0, 0.05);
  o.check(seconds < 10.0, fmt("run time %.2f s (limit 10 s)", seconds));
  return o;
}

Outcome dynamic_vs_static() {
  Outcome o;
  run_presets();
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& c = preset().aircraft[i];
    const auto l = linear::assess(preset().env, c.aircraft, preset().linear_config(c));
    const auto& s = preset_summaries[i];
    o.check(s.peak_propeller_W > l.peak_onboard_power,
            fmt("propeller %s: simulated %.4g W > static %.4g W", c.label.c_str(),
                s.peak_propeller_W, l.peak_onboard_power));
    check_rel(o, "ground " + c.label + " simulated vs static [W]", s.peak_ground_W,
              l.peak_ground_power, 0.15);
  }
  return o;
}

// Random rotational configurations for the grid oracles; infeasible draws are
// replaced.
struct RandomCase {
  Aircraft ac;
  double arm, line, gamma_v;
  RotationalEquilibrium best;
};

std::vector<RandomCase> random_cases(int count) {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const auto& cfg = preset().rotational;
  std::vector<RandomCase> out;
  for (int attempt = 0; attempt < 1000 && static_cast<int>(out.size()) < count; ++attempt) {
    const double span = 5.0 + 15.0 * u(rng);
    const double loading = 10.0 + 10.0 * u(rng);
    const auto ac = Aircraft::from_span(span, 10.0, loading, 1.0, 0.1);
    const double arm = 30.0 + 20.0 * u(rng);
    const double line = 5.0 + 95.0 * u(rng);
    const double gv = cfg.gamma_v_min() + (deg_to_rad(70.0) - cfg.gamma_v_min()) * u(rng);
    const auto e = rotational::min_power_at(calm(), ac, cfg, arm, line, gv);
    if (e) out.push_back({ac, arm, line, gv, *e});
  }
  return out;
}

Outcome property_suite() {
  Outcome o;
  const auto& cfg = preset().rotational;

  // Grid oracles on random configurations.
  const auto cases = random_cases(10);
  int power_ok = 0, eq_ok = 0;
  for (const auto& k : cases) {
    keep(k.best, k.ac);
    const auto grid = oracle::gamma_h_grid_minimum(calm(), k.ac, cfg, k.arm, k.line, k.gamma_v);
    if (grid.any && k.best.power <= grid.minimum * (1.0 + 1e-9) &&
        k.best.power >= grid.minimum - grid.max_jump) {
      ++power_ok;
    }
    const auto e = rotational::solve_equilibrium(calm(), k.ac, k.arm, k.line, k.gamma_v,
                                                 k.best.gamma_h);
    if (e) {
      keep(e, k.ac);
      const auto g = oracle::residual_grid_minimum(calm(), k.ac, cfg, k.arm, k.line, k.gamma_v,
                                                   k.best.gamma_h, e->omega);
      if (std::abs(g.zeta - e->zeta) <= g.dz && std::abs(g.omega - e->omega) <= g.dw) ++eq_ok;
    }
  }
  o.check(cases.size() == 10 && power_ok == 10,
          fmt("min_power_at vs 200-point gamma_H grid: %d/%zu configurations agree", power_ok,
              cases.size()));
  o.check(cases.size() == 10 && eq_ok == 10,
          fmt("solve_equilibrium vs 400x400 (zeta, omega) grid: %d/%zu within one cell", eq_ok,
              cases.size()));

  // Residuals and tension consistency of every returned solution.
  double worst_res = 0.0, worst_ref = 0.0, worst_t = 0.0;
  for (const auto& [e, ac] : returned_solutions()) {
    const EquilibriumPoint pt{e.zeta, e.omega, e.gamma_h};
    const auto r = rotational::equilibrium_residuals(calm(), ac, e.arm_length, e.line_length,
                                                     e.gamma_v, pt);
    const auto q = oracle::reference_residuals(calm(), ac, e.arm_length, e.line_length, e.gamma_v,
                                               e.zeta, e.omega, e.gamma_h);
    worst_res = std::max({worst_res, std::abs(r.tangential), std::abs(r.vertical)});
    worst_ref = std::max({worst_ref, std::abs(q.tangential), std::abs(q.vertical)});
    const double t = rotational::tension(calm(), ac, e.arm_length, e.line_length, e.gamma_v, pt);
    worst_t = std::max(worst_t, std::abs(t - e.tension) / std::max(1.0, std::abs(t)));
  }
  o.check(!returned_solutions().empty() && worst_res < 1e-8 && worst_ref < 1e-8,
          fmt("residuals of %zu returned solutions: max %.2e, independent coding %.2e (< 1e-8)",
              returned_solutions().size(), worst_res, worst_ref));
  o.check(worst_t < 1e-9, fmt("stored vs re-evaluated tension: max rel. gap %.2e (< 1e-9)", worst_t));

  // Derivative oracle.
  {
    const auto sc = preset().simulation_config(preset().aircraft[1]);
    oracle::ReferenceDynamics ref;
    ref.p = sc.plant;
    ref.env = sc.env;
    ref.aero = sc.aero;
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const auto x = oracle::random_state(rng);
      const ControlInput in{-3000.0 + 6000.0 * u(rng), -290.0 + 580.0 * u(rng), 350.0 * u(rng)};
      worst = std::max(worst, oracle::max_relative_gap(
                                  dynamics::carried_derivative(x, in, ref.p, ref.env, ref.aero),
                                  ref.carried(x, in)));
      worst = std::max(worst, oracle::max_relative_gap(
                                  dynamics::airborne_derivative(x, in, ref.p, ref.env, ref.aero),
                                  ref.airborne(x, in)));
    }
    o.check(worst <= 1e-12, fmt("derivatives at 1000 random states, both modes: max gap %.2e "
                                "(<= 1e-12)", worst));
  }

  // Step halving on the full reference run.
  {
    const auto a_cfg = preset().simulation_config(preset().aircraft[1]);
    auto b_cfg = a_cfg;
    b_cfg.step = a_cfg.step / 2.0;
    const auto a = sim::run(a_cfg);
    const auto b = sim::run(b_cfg);
    double worst = 0.0, worst_carried = 0.0, at = 0.0;
    const std::size_t n = std::min(a.records.size(), b.records.size());
    for (std::size_t k = 0; k < n; ++k) {
      const double g = oracle::max_relative_gap(a.records[k].x, b.records[k].x);
      if (a.records[k].mode == Mode::Carried && b.records[k].mode == Mode::Carried) {
        worst_carried = std::max(worst_carried, g);
      }
      if (g > worst) {
        worst = g;
        at = a.records[k].t;
      }
    }
    o.check(a.records.size() == b.records.size() && worst < 1e-6,
            fmt("step halving, full run: max gap %.2e at t = %.2f s, carried phase %.2e (< 1e-6)",
                worst, at, worst_carried));
  }

  // Tether slackness and energy bookkeeping for every preset.
  run_presets();
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& c = preset().aircraft[i];
    const double limit = 0.01 * c.aircraft.mass() * preset().env.g;
    double peak = 0.0, when = 0.0;
    for (const auto& r : preset_runs[i].records) {
      if (r.tension > peak) {
        peak = r.tension;
        when = r.t;
      }
    }
    o.check(peak < limit, fmt("tether tension %s: peak %.4g N at t = %.2f s (limit %.4g N)",
                              c.label.c_str(), peak, when, limit));
    const auto b = oracle::carried_energy_balance(preset().simulation_config(c));
    o.check(b.lifted && b.relative_error() < 0.005,
            fmt("carried-mode energy %s: gain %.4g J, net work %.4g J, gap %.3f%% (< 0.5%%)",
                c.label.c_str(), b.energy_gain, b.net_work, 100.0 * b.relative_error()));
  }
  return o;
}

Outcome curve_shapes() {
  Outcome o;
  const auto& cfg = preset().rotational;
  const auto& mid = preset().aircraft[1].aircraft;

  // Power against inclination at the optimal arm, several line lengths.
  std::vector<double> gammas;
  for (int i = 0; i <= 50; ++i) gammas.push_back(cfg.gamma_v_min() + (deg_to_rad(89.0) - cfg.gamma_v_min()) * i / 50.0);
  int rises = 0, points = 0;
  for (double line : {10.0, 30.0, 60.0, 100.0}) {
    const auto rows = rotational::power_vs_gamma(calm(), mid, cfg, 50.0, line, gammas);
    double prev = -1.0;
    for (const auto& r : rows) {
      if (!r.feasible) continue;
      ++points;
      if (prev >= 0.0 && r.power < prev * (1.0 - 1e-9)) ++rises;
      prev = r.power;
    }
  }
  o.check(points > 0 && rises == 0,
          fmt("P nondecreasing in gamma_V at R = 50 m: %d decreases over %d feasible points", rises,
              points));

  // Peak power against arm length, preset configuration.
  if (arm_optima.size() < 2) arm_optima = {ArmOptimum{}, rotational::optimal_arm(calm(), mid, cfg)};
  const auto arms = rotational::arm_grid(cfg);
  const auto& per_arm = arm_optima[1].per_arm;
  bool monotone = true, complete = true;
  double prev = -1.0;
  for (const auto& p : per_arm) {
    if (!p) {
      complete = false;
      continue;
    }
    if (prev >= 0.0 && p->power > prev * (1.0 + 1e-9)) monotone = false;
    prev = p->power;
  }
  o.check(complete && monotone, fmt("peak power nonincreasing in R over [%.0f, %.0f] m",
                                    arms.front(), arms.back()));
  const double tail_start = arms.back() - 0.2 * (arms.back() - arms.front());
  double tail_max = 0.0, tail_min = 1e300;
  for (std::size_t i = 0; i < arms.size(); ++i) {
    if (arms[i] >= tail_start - 1e-9 && per_arm[i]) {
      tail_max = std::max(tail_max, per_arm[i]->power);
      tail_min = std::min(tail_min, per_arm[i]->power);
    }
  }
  const double change = (tail_max - tail_min) / tail_min;
  o.check(change < 0.05, fmt("relative change over R in [%.0f, %.0f] m: %.2f%% (< 5%%)", tail_start,
                             arms.back(), 100.0 * change));

  // Maximum inclination curves for two spans at equal loading and arm.
  const auto lines = rotational::line_grid(cfg);
  const auto small = rotational::max_gamma_curve(calm(), preset().aircraft[0].aircraft, cfg, 50.0, lines);
  const auto large = rotational::max_gamma_curve(calm(), preset().aircraft[2].aircraft, cfg, 50.0, lines);
  double worst = 0.0;
  bool matched = true;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (small[i].gamma_v_max.has_value() != large[i].gamma_v_max.has_value()) {
      matched = false;
      continue;
    }
    if (small[i].gamma_v_max) {
      worst = std::max(worst, std::abs(*small[i].gamma_v_max - *large[i].gamma_v_max));
    }
  }
  o.check(matched && rad_to_deg(worst) < 3.0,
          fmt("max gamma_V curves d=5 vs d=20: max gap %.2f deg (< 3 deg)%s", rad_to_deg(worst),
              matched ? "" : ", feasibility differs"));
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const std::vector<Criterion> criteria = {
      {"peak crosswind power", crosswind_power},
      {"vertical take-off assessment", vertical_takeoff},
      {"linear static assessment", linear_takeoff},
      {"rotational optimization", rotational_takeoff},
      {"dynamic simulation, d=10", reference_simulation},
      {"dynamic vs static comparison", dynamic_vs_static},
      {"property suite", property_suite},
      {"curve shapes", curve_shapes},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    std::printf("%s %zu %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name);
    for (const auto& l : o.lines) std::printf("       %s\n", l.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
