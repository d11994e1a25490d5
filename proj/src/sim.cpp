#include "awe/sim.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace awe {

void SimulationConfig::validate() const {
  env.validate();
  plant.validate();
  control.validate();
  propellers.validate();
  if (!(duration > 0.0)) throw DomainError("simulation duration must be positive");
  if (!(step > 0.0 && step <= 0.5 * control.sample_time() * (1.0 + 1e-12))) {
    throw DomainError("integrator step must not exceed half the control period");
  }
  const double ratio = control.sample_time() / step;
  if (std::abs(ratio - std::round(ratio)) > 1e-9 * ratio) {
    throw DomainError("control period must be an integer multiple of the integrator step");
  }
  if (!(initial_line >= 0.0)) throw DomainError("initial line length must be non-negative");
}

namespace sim {
namespace {

StateVector axpy(const StateVector& x, double a, const StateVector& k) {
  StateVector y;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = x[i] + a * k[i];
  return y;
}

StateVector rk4(Mode mode, const StateVector& x, const ControlInput& u, double h,
                const SimulationConfig& c) {
  auto f = [&](const StateVector& s) {
    return dynamics::derivative(mode, s, u, c.plant, c.env, c.aero);
  };
  const auto k1 = f(x);
  const auto k2 = f(axpy(x, 0.5 * h, k1));
  const auto k3 = f(axpy(x, 0.5 * h, k2));
  const auto k4 = f(axpy(x, h, k3));
  StateVector y;
  for (std::size_t i = 0; i < y.size(); ++i) {
    y[i] = x[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
  return y;
}

bool finite(const StateVector& x) {
  return std::all_of(x.begin(), x.end(), [](double v) { return std::isfinite(v); });
}

TrajectoryRecord make_record(double t, const StateVector& x, Mode mode, const ControlInput& u,
                             const SimulationConfig& c) {
  TrajectoryRecord r;
  r.t = t;
  r.x = x;
  r.mode = mode;
  r.u = u;
  const auto f = dynamics::flight_forces(x, mode, c.plant, c.env, c.aero);
  r.tension = f.tension;
  r.lift = f.lift;
  r.drag = f.drag;
  r.power_winch = u.winch_torque * x[1];
  r.power_slide = u.slide_torque * x[3];
  r.power_propeller = vertical::actuator_disk_power(u.thrust, f.speed, c.propellers.disk_area(),
                                                    c.propellers.efficiency, c.env.rho);
  return r;
}

}  // namespace

Trajectory run(const SimulationConfig& cfg) {
  cfg.validate();
  const double ts = cfg.control.sample_time();
  const long substeps = std::lround(ts / cfg.step);
  const long samples = std::lround(cfg.duration / ts);
  constexpr double kSwitchTolerance = 1e-9;

  Trajectory traj;
  traj.records.reserve(static_cast<std::size_t>(samples) + 1);
  StateVector x = dynamics::initial_state(cfg.plant, cfg.initial_line, cfg.initial_position);
  Mode mode = Mode::Carried;
  PropellerController propeller(cfg.control);

  try {
    for (long k = 0; k <= samples; ++k) {
      const double t0 = static_cast<double>(k) * ts;
      ControlInput u = control::motor_commands(mode, x, cfg.plant, cfg.control);
      if (mode == Mode::Airborne) {
        u.thrust = propeller.step_with_limits(cfg.control.target_climb_speed - x[7]);
      }
      u = control::saturate(u, cfg.control);
      traj.records.push_back(make_record(t0, x, mode, u, cfg));
      if (k == samples) break;

      for (long j = 0; j < substeps; ++j) {
        const double t = t0 + static_cast<double>(j) * cfg.step;
        StateVector next = rk4(mode, x, u, cfg.step, cfg);
        if (mode == Mode::Carried &&
            dynamics::switch_condition(next, cfg.plant, cfg.env, cfg.aero)) {
          double lo = 0.0;
          double hi = cfg.step;
          StateVector at_hi = next;
          while (hi - lo > kSwitchTolerance) {
            const double mid = 0.5 * (lo + hi);
            const StateVector trial = rk4(mode, x, u, mid, cfg);
            if (dynamics::switch_condition(trial, cfg.plant, cfg.env, cfg.aero)) {
              hi = mid;
              at_hi = trial;
            } else {
              lo = mid;
            }
          }
          traj.lift_off = SwitchEvent{t + hi, at_hi};
          mode = Mode::Airborne;
          next = cfg.step - hi > 0.0 ? rk4(mode, at_hi, u, cfg.step - hi, cfg) : at_hi;
        }
        if (!finite(next)) throw OutOfEnvelopeError("state became non-finite");
        x = next;
      }
    }
  } catch (const OutOfEnvelopeError& e) {
    throw SimulationDivergedError(std::string("simulation diverged: ") + e.what(),
                                  std::move(traj));
  } catch (const DomainError& e) {
    throw SimulationDivergedError(std::string("simulation diverged: ") + e.what(),
                                  std::move(traj));
  }
  return traj;
}

PowerSummary power_summary(const Trajectory& traj, const SimulationConfig& cfg) {
  if (!traj.lift_off) throw DomainError("trajectory has no lift-off");
  PowerSummary s;
  const auto& sw = *traj.lift_off;
  s.takeoff_time_s = sw.time;
  s.takeoff_distance_m = sw.x[4];
  s.takeoff_speed_ms = std::hypot(sw.x[5], sw.x[7]);
  const double t_end = traj.records.back().t;
  double climb_sum = 0.0;
  int climb_count = 0;
  for (const auto& r : traj.records) {
    if (r.mode == Mode::Carried) {
      s.peak_ground_W = std::max(s.peak_ground_W, std::abs(r.power_slide));
      s.peak_winch_W = std::max(s.peak_winch_W, std::abs(r.power_winch));
      s.peak_ground_combined_W =
          std::max(s.peak_ground_combined_W, std::abs(r.power_winch) + std::abs(r.power_slide));
      s.peak_tension_carried_N = std::max(s.peak_tension_carried_N, r.tension);
    }
    s.peak_propeller_W = std::max(s.peak_propeller_W, r.power_propeller);
    s.peak_tension_N = std::max(s.peak_tension_N, r.tension);
    s.slide_travel_m = std::max(s.slide_travel_m, cfg.plant.pulley_radius * r.x[2]);
    if (r.mode == Mode::Airborne && r.t >= t_end - 2.0) {
      climb_sum += r.x[7];
      ++climb_count;
    }
  }
  if (climb_count > 0) s.final_climb_speed_ms = climb_sum / climb_count;
  return s;
}

void write_csv(std::ostream& os, const Trajectory& traj) {
  os << "t_s,x1,x2,x3,x4,x5,x6,x7,x8,x9,x10,mode,u1_Nm,u2_Nm,u3_N,tension_N,P_M1_W,P_M2_W,"
        "P_prop_W\n";
  const auto old = os.precision(17);
  for (const auto& r : traj.records) {
    os << r.t;
    for (double v : r.x) os << ',' << v;
    os << ',' << (r.mode == Mode::Carried ? 1 : 2) << ',' << r.u.winch_torque << ','
       << r.u.slide_torque << ',' << r.u.thrust << ',' << r.tension << ',' << r.power_winch
       << ',' << r.power_slide << ',' << r.power_propeller << '\n';
  }
  os.precision(old);
}

}  // namespace sim
}  // namespace awe
