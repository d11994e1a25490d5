#include "awe/vertical.hpp"

#include <cmath>

#include "awe/errors.hpp"

namespace awe {

void PropellerBank::validate() const {
  if (count < 1) throw DomainError("propeller count must be at least 1");
  if (!(diameter > 0.0)) throw DomainError("propeller diameter must be positive");
  if (!(efficiency > 0.0 && efficiency <= 1.0)) {
    throw DomainError("propeller efficiency must lie in (0, 1]");
  }
}

double PropellerBank::disk_area() const {
  return static_cast<double>(count) * kPi * diameter * diameter / 4.0;
}

void OnboardStorage::validate() const {
  if (!(battery_energy_density > 0.0)) throw DomainError("battery energy density must be positive");
  if (!(motor_power_density > 0.0)) throw DomainError("motor power density must be positive");
}

double OnboardStorage::mass_per_watt(double climb_duration) const {
  return climb_duration / battery_energy_density + 1.0 / motor_power_density;
}

void VerticalConfig::validate() const {
  if (!(target_height > 0.0)) throw DomainError("target height must be positive");
  if (!(climb_speed > 0.0)) throw DomainError("climb speed must be positive");
  storage.validate();
}

namespace vertical {

double actuator_disk_power(double thrust, double inflow_speed, double disk_area,
                           double efficiency, double rho) {
  if (!(disk_area > 0.0)) throw DomainError("actuator disk area must be positive");
  if (thrust < 0.0) throw DomainError("actuator disk thrust must be non-negative");
  const double induced = std::sqrt(thrust / (2.0 * rho * disk_area) +
                                   inflow_speed * inflow_speed / 4.0);
  return thrust / efficiency * (induced + 0.5 * inflow_speed);
}

PropellerBank default_propellers(const Aircraft& ac) {
  return PropellerBank{2, ac.chord(), 0.7};
}

VerticalAssessment assess(const Environment& env, const Aircraft& ac, const PropellerBank& props,
                          const VerticalConfig& cfg) {
  env.validate();
  props.validate();
  cfg.validate();

  constexpr int kMaxIterations = 100;
  constexpr double kTolerance = 1e-12;  // [kg]

  const double area = props.disk_area();
  const double kg_per_watt = cfg.storage.mass_per_watt(cfg.target_height / cfg.climb_speed);
  auto power_for = [&](double added) {
    return actuator_disk_power((ac.mass() + added) * env.g, cfg.climb_speed, area,
                               props.efficiency, env.rho);
  };

  VerticalAssessment out;
  double added = 0.0;
  for (int it = 1; it <= kMaxIterations; ++it) {
    const double power = power_for(added);
    const double next = power * kg_per_watt;
    if (!std::isfinite(next)) break;
    const bool done = std::abs(next - added) <= kTolerance;
    added = next;
    if (done) {
      out.peak_onboard_power = power_for(added);
      out.added_mass = added;
      out.ground_area = kPi * ac.span() * ac.span() / 4.0;
      out.iterations = it;
      return out;
    }
  }
  throw NonConvergenceError(
      "vertical take-off: power/mass fixed point did not converge; battery or motor "
      "densities are too low for this aircraft");
}

}  // namespace vertical
}  // namespace awe
