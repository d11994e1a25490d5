#pragma once

#include "awe/core.hpp"

namespace awe {

struct PropellerBank {
  int count = 2;
  double diameter = 1.0;    // [m]
  double efficiency = 0.7;  // shaft to fluid power, in (0, 1]

  void validate() const;
  double disk_area() const;  // total over all propellers [m^2]
  bool operator==(const PropellerBank&) const = default;
};

// Battery and motor sizing densities shared by both propeller-assisted concepts.
struct OnboardStorage {
  double battery_energy_density = 720e3;  // [J/kg]
  double motor_power_density = 2.5e3;     // [W/kg]

  void validate() const;
  /// Added mass per watt of peak power for a climb of the given duration [s].
  double mass_per_watt(double climb_duration) const;
  bool operator==(const OnboardStorage&) const = default;
};

struct VerticalConfig {
  double target_height = 100.0;  // h [m]
  double climb_speed = 1.0;      // v_c [m/s]
  OnboardStorage storage;

  void validate() const;
  bool operator==(const VerticalConfig&) const = default;
};

struct VerticalAssessment {
  double peak_onboard_power = 0.0;  // [W]
  double added_mass = 0.0;          // [kg]
  double ground_area = 0.0;         // [m^2]
  int iterations = 0;
};

namespace vertical {

/// Momentum-theory shaft power for a disk producing `thrust` with axial
/// inflow `inflow_speed`.
double actuator_disk_power(double thrust, double inflow_speed, double disk_area,
                           double efficiency, double rho);

/// Solves the coupled power / added-mass system by Picard iteration from
/// zero added mass. Throws NonConvergenceError after 100 iterations.
VerticalAssessment assess(const Environment& env, const Aircraft& ac, const PropellerBank& props,
                          const VerticalConfig& cfg);

/// Two propellers whose diameter equals the chord.
PropellerBank default_propellers(const Aircraft& ac);

}  // namespace vertical
}  // namespace awe
