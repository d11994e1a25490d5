#include "awe/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "awe/errors.hpp"

namespace awe {

std::string to_string(Mode mode) { return mode == Mode::Carried ? "carried" : "airborne"; }

void PlantParams::validate() const {
  const double values[] = {winch_inertia,    winch_friction, winch_radius,   slide_inertia,
                           slide_friction,   pulley_radius,  slide_mass,     aircraft_mass,
                           rail_friction,    tether_radius,  tether_density, pitch_bandwidth,
                           wing_area};
  for (double v : values) {
    if (!(v > 0.0)) throw DomainError("plant parameters must be positive");
  }
  if (!(tether_stiffness >= 0.0)) throw DomainError("tether stiffness must be non-negative");
  if (!std::isfinite(trim)) throw DomainError("trim angle must be finite");
}

namespace dynamics {

double delta_alpha(const StateVector& x, Mode mode) {
  const double vx = x[5];
  const double vy = x[7];
  if (std::hypot(vx, vy) < 1e-9) return 0.0;
  if (mode == Mode::Airborne && !(vx > 0.0)) {
    throw OutOfEnvelopeError("aircraft horizontal speed is not positive");
  }
  return std::atan2(-vy, vx);
}

double tether_tension(const StateVector& x, const PlantParams& p) {
  const double stretch = std::hypot(x[4], x[6]) - p.winch_radius * x[0];
  return std::max(0.0, p.tether_stiffness * stretch);
}

double tether_mass(const StateVector& x, const PlantParams& p) {
  return p.tether_density * kPi * p.tether_radius * p.tether_radius * p.winch_radius * x[0];
}

FlightForces flight_forces(const StateVector& x, Mode mode, const PlantParams& p,
                           const Environment& env, const AeroTable& aero) {
  FlightForces f;
  f.speed = std::hypot(x[5], x[7]);
  f.delta_alpha = delta_alpha(x, mode);
  f.alpha = p.trim + f.delta_alpha + x[8];
  const double q = 0.5 * env.rho * p.wing_area * f.speed * f.speed;
  if (q > 0.0) {
    const auto c = aero.coefficients(f.alpha);
    f.lift = q * c.cl;
    f.drag = q * c.cd;
  }
  f.tension = tether_tension(x, p);
  return f;
}

StateVector carried_derivative(const StateVector& x, const ControlInput& u, const PlantParams& p,
                               const Environment& env, const AeroTable& aero) {
  const auto f = flight_forces(x, Mode::Carried, p, env, aero);
  const double r2 = p.pulley_radius;
  const double inertia = p.slide_inertia + (p.slide_mass + p.aircraft_mass) * r2 * r2;
  StateVector d{};
  d[0] = x[1];
  d[1] = (p.winch_radius * f.tension - p.winch_friction * x[1] + u.winch_torque) / p.winch_inertia;
  d[2] = x[3];
  d[3] = (r2 * (-f.tension - f.drag * std::cos(f.delta_alpha) +
                f.lift * std::sin(f.delta_alpha) - p.rail_friction * r2 * x[3]) -
          p.slide_friction * x[3] + u.slide_torque) /
         inertia;
  d[4] = x[5];
  d[5] = r2 * d[3];
  d[6] = x[7];
  d[7] = 0.0;
  d[8] = x[9];
  d[9] = 0.0;
  return d;
}

StateVector airborne_derivative(const StateVector& x, const ControlInput& u,
                                const PlantParams& p, const Environment& env,
                                const AeroTable& aero) {
  const auto f = flight_forces(x, Mode::Airborne, p, env, aero);
  const double r2 = p.pulley_radius;
  const double mass = p.aircraft_mass + tether_mass(x, p);
  const double sd = std::sin(f.delta_alpha);
  const double cd = std::cos(f.delta_alpha);
  StateVector d{};
  d[0] = x[1];
  d[1] = (p.winch_radius * f.tension - p.winch_friction * x[1] + u.winch_torque) / p.winch_inertia;
  d[2] = x[3];
  d[3] = (-r2 * r2 * p.rail_friction * x[3] - p.slide_friction * x[3] + u.slide_torque) /
         (p.slide_inertia + p.slide_mass * r2 * r2);
  d[4] = x[5];
  d[5] = (f.lift * sd - f.drag * cd + std::cos(x[8]) * u.thrust) / mass;
  d[6] = x[7];
  d[7] = (f.lift * cd + f.drag * sd - mass * env.g + std::sin(x[8]) * u.thrust) / mass;
  d[8] = x[9];
  const double w = p.pitch_bandwidth;
  if (p.pitch_loop == PitchLoop::AngleTracking) {
    d[9] = w * (w * (-f.delta_alpha - x[8]) - x[9]);
  } else {
    d[9] = w * (-f.delta_alpha - x[9]);
  }
  return d;
}

StateVector derivative(Mode mode, const StateVector& x, const ControlInput& u,
                       const PlantParams& p, const Environment& env, const AeroTable& aero) {
  return mode == Mode::Carried ? carried_derivative(x, u, p, env, aero)
                               : airborne_derivative(x, u, p, env, aero);
}

double lift_margin(const StateVector& x, const PlantParams& p, const Environment& env,
                   const AeroTable& aero) {
  const auto f = flight_forces(x, Mode::Carried, p, env, aero);
  return f.lift * std::cos(f.delta_alpha) - p.aircraft_mass * env.g;
}

bool switch_condition(const StateVector& x, const PlantParams& p, const Environment& env,
                      const AeroTable& aero) {
  return lift_margin(x, p, env, aero) > 0.0;
}

StateVector initial_state(const PlantParams& p, double line_length, double position) {
  StateVector x{};
  x[0] = line_length / p.winch_radius;
  x[4] = position;
  return x;
}

}  // namespace dynamics
}  // namespace awe
