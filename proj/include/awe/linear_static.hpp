#pragma once

#include "awe/core.hpp"
#include "awe/vertical.hpp"

namespace awe {

struct LinearConfig {
  double travel_length = 12.0;   // L [m]
  double viscous_coeff = 0.3;    // c_v [kg/s]
  double target_height = 100.0;  // h [m]
  double climb_speed = 1.0;      // v_c [m/s]
  PropellerBank props;
  OnboardStorage storage;

  void validate() const;
};

struct ClimbSolution {
  double climb_ratio = 0.0;    // c_r = v_c / v_fwd
  double forward_speed = 0.0;  // [m/s]
  double thrust = 0.0;         // [N]
};

struct LinearAssessment {
  double takeoff_speed = 0.0;        // v* [m/s]
  double peak_ground_power = 0.0;    // [W]
  double peak_onboard_power = 0.0;   // [W]
  double added_mass = 0.0;           // [kg]
  double ground_area = 0.0;          // [m^2]
  ClimbSolution climb;
  int iterations = 0;
};

namespace linear {

double takeoff_speed(const Environment& env, const Aircraft& ac, double added_mass);

/// Peak power of the ground acceleration system at the end of the rail.
double ground_power(const Environment& env, const Aircraft& ac, const LinearConfig& cfg,
                    double added_mass);

/// Forward speed and thrust for a steady climb at the given climb ratio, zero wind.
ClimbSolution climb_solution(const Environment& env, const Aircraft& ac, double added_mass,
                             double climb_ratio);

/// Same, for a prescribed vertical speed: bisection on c_r in (0, 1) until
/// c_r * v_fwd(c_r) == v_c.
ClimbSolution climb_for_rate(const Environment& env, const Aircraft& ac, double added_mass,
                             double climb_speed);

/// Small-angle form of the required thrust, valid for C_l/C_d >> c_r.
double approx_climb_thrust(const Environment& env, const Aircraft& ac, double added_mass,
                           double climb_ratio);

LinearAssessment assess(const Environment& env, const Aircraft& ac, const LinearConfig& cfg);

/// Two propellers with half-chord diameter.
PropellerBank default_propellers(const Aircraft& ac);

double ground_area(const Aircraft& ac, double travel_length);

}  // namespace linear
}  // namespace awe
