#include "awe/linear_static.hpp"

#include <algorithm>
#include <cmath>

#include "awe/errors.hpp"

namespace awe {

void LinearConfig::validate() const {
  if (!(travel_length > 0.0)) throw DomainError("travel length must be positive");
  if (!(viscous_coeff >= 0.0)) throw DomainError("viscous coefficient must be non-negative");
  if (!(target_height > 0.0)) throw DomainError("target height must be positive");
  if (!(climb_speed > 0.0)) throw DomainError("climb speed must be positive");
  props.validate();
  storage.validate();
}

namespace linear {

double takeoff_speed(const Environment& env, const Aircraft& ac, double added_mass) {
  return std::sqrt(2.0 * (ac.mass() + added_mass) * env.g /
                   (env.rho * ac.area() * ac.lift_coeff()));
}

double ground_power(const Environment& env, const Aircraft& ac, const LinearConfig& cfg,
                    double added_mass) {
  if (!(cfg.travel_length > 0.0)) throw DomainError("travel length must be positive");
  const double v = takeoff_speed(env, ac, added_mass);
  const double accel = v * v / (2.0 * cfg.travel_length);
  const double inertial = (ac.mass() + added_mass) * accel;
  const double drag = 0.5 * env.rho * ac.drag_coeff() * ac.area() * v * v;
  const double viscous = cfg.viscous_coeff * v;
  return v * (inertial + drag + viscous);
}

ClimbSolution climb_solution(const Environment& env, const Aircraft& ac, double added_mass,
                             double climb_ratio) {
  const double efficiency = ac.efficiency();
  if (climb_ratio < 0.0) throw DomainError("climb ratio must be non-negative");
  if (climb_ratio >= efficiency) {
    throw DomainError("no climb possible: climb ratio exceeds aerodynamic efficiency");
  }
  const double weight = (ac.mass() + added_mass) * env.g;
  const double lift_factor = 0.5 * env.rho * ac.area() * ac.lift_coeff() *
                             std::sqrt(1.0 + climb_ratio * climb_ratio) *
                             (1.0 - climb_ratio / efficiency);
  ClimbSolution s;
  s.climb_ratio = climb_ratio;
  s.forward_speed = std::sqrt(weight / lift_factor);
  s.thrust = weight * (1.0 + climb_ratio * efficiency) / (efficiency - climb_ratio);
  return s;
}

ClimbSolution climb_for_rate(const Environment& env, const Aircraft& ac, double added_mass,
                             double climb_speed) {
  if (!(climb_speed > 0.0)) throw DomainError("climb speed must be positive");
  auto mismatch = [&](double cr) {
    return cr * climb_solution(env, ac, added_mass, cr).forward_speed - climb_speed;
  };
  double lo = 0.0;
  double hi = std::min(1.0, 0.999999 * ac.efficiency());
  if (mismatch(hi) < 0.0) {
    throw DomainError("requested climb speed not reachable with climb ratio below 1");
  }
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    (mismatch(mid) < 0.0 ? lo : hi) = mid;
  }
  return climb_solution(env, ac, added_mass, 0.5 * (lo + hi));
}

double approx_climb_thrust(const Environment& env, const Aircraft& ac, double added_mass,
                           double climb_ratio) {
  return (ac.mass() + added_mass) * env.g * (1.0 / ac.efficiency() + climb_ratio);
}

PropellerBank default_propellers(const Aircraft& ac) {
  return PropellerBank{2, ac.chord() / 2.0, 0.7};
}

double ground_area(const Aircraft& ac, double travel_length) {
  return kPi * travel_length * travel_length / 4.0 + kPi * ac.aspect_ratio() / 4.0 * ac.area();
}

LinearAssessment assess(const Environment& env, const Aircraft& ac, const LinearConfig& cfg) {
  env.validate();
  cfg.validate();

  constexpr int kMaxIterations = 100;
  constexpr double kTolerance = 1e-12;  // [kg]
  const double kg_per_watt = cfg.storage.mass_per_watt(cfg.target_height / cfg.climb_speed);
  const double disk = cfg.props.disk_area();

  auto onboard_power = [&](double added, ClimbSolution& climb) {
    climb = climb_for_rate(env, ac, added, cfg.climb_speed);
    return vertical::actuator_disk_power(climb.thrust, climb.forward_speed, disk,
                                         cfg.props.efficiency, env.rho);
  };

  double added = 0.0;
  for (int it = 1; it <= kMaxIterations; ++it) {
    ClimbSolution climb;
    const double next = onboard_power(added, climb) * kg_per_watt;
    if (!std::isfinite(next)) break;
    const bool done = std::abs(next - added) <= kTolerance;
    added = next;
    if (done) {
      LinearAssessment out;
      out.peak_onboard_power = onboard_power(added, out.climb);
      out.added_mass = added;
      out.takeoff_speed = takeoff_speed(env, ac, added);
      out.peak_ground_power = ground_power(env, ac, cfg, added);
      out.ground_area = ground_area(ac, cfg.travel_length);
      out.iterations = it;
      return out;
    }
  }
  throw NonConvergenceError("linear take-off: power/mass fixed point did not converge");
}

}  // namespace linear
}  // namespace awe
