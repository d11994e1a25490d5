#pragma once

// Two-mode planar model of the linear take-off. State layout:
//   x1, x2   winch angle and speed
//   x3, x4   slide-motor angle and speed
//   x5, x6   aircraft horizontal position and velocity
//   x7, x8   aircraft vertical position and velocity
//   x9, x10  pitch angle and rate
// In the Carried mode the aircraft rides on the slide; in the Airborne mode
// it flies free and the reeled-out tether mass is lumped into the aircraft.

#include <array>
#include <string>

#include "awe/aero.hpp"
#include "awe/core.hpp"

namespace awe {

using StateVector = std::array<double, 10>;

enum class Mode { Carried, Airborne };

std::string to_string(Mode mode);

struct HybridState {
  StateVector x{};
  Mode mode = Mode::Carried;
};

// Closed-loop pitch behaviour assumed for the elevator controller.
enum class PitchLoop {
  // Pitch angle follows -delta_alpha; second order with natural frequency
  // and decay rate omega_beta.
  AngleTracking,
  // Pitch rate follows -delta_alpha at first order (x10' = w(-da - x10)).
  RateTracking,
};

struct PlantParams {
  double winch_inertia = 30.0;      // J_M1 [kg m^2]
  double winch_friction = 0.002;    // beta_M1
  double winch_radius = 0.5;        // r_M1 [m]
  double slide_inertia = 0.1;       // J_M2 [kg m^2]
  double slide_friction = 0.002;    // beta_M2
  double pulley_radius = 0.15;      // r_M2 [m]
  double slide_mass = 30.0;         // m_s [kg]
  double aircraft_mass = 150.0;     // m [kg]
  double rail_friction = 0.3;       // beta_s [kg/s]
  double tether_stiffness = 9.1e5;  // k_t [N/m]
  double tether_radius = 0.0075;    // r_t [m]
  double tether_density = 970.0;    // rho_t [kg/m^3]
  double pitch_bandwidth = 10.0;    // omega_beta [rad/s]
  double trim = 0.24;               // theta_0 [rad]
  double wing_area = 10.0;          // A [m^2]
  PitchLoop pitch_loop = PitchLoop::AngleTracking;

  void validate() const;
  bool operator==(const PlantParams&) const = default;
};

struct ControlInput {
  double winch_torque = 0.0;  // u1 [N m]
  double slide_torque = 0.0;  // u2 [N m]
  double thrust = 0.0;        // u3 [N]

  bool operator==(const ControlInput&) const = default;
};

// Quantities shared by the derivative and the logger.
struct FlightForces {
  double speed = 0.0;        // |(x6, x8)| [m/s]
  double delta_alpha = 0.0;  // [rad]
  double alpha = 0.0;        // [rad]
  double lift = 0.0;         // [N]
  double drag = 0.0;         // [N]
  double tension = 0.0;      // [N]
};

namespace dynamics {

/// Flight-path angle, positive when descending. Zero below 1e-9 m/s. Throws
/// OutOfEnvelopeError in the Airborne mode when the aircraft is not moving
/// forward.
double delta_alpha(const StateVector& x, Mode mode);

/// Spring force when the reeled-out length is shorter than the distance to
/// the aircraft, zero otherwise.
double tether_tension(const StateVector& x, const PlantParams& p);

/// Mass of the reeled-out tether.
double tether_mass(const StateVector& x, const PlantParams& p);

FlightForces flight_forces(const StateVector& x, Mode mode, const PlantParams& p,
                           const Environment& env, const AeroTable& aero);

StateVector carried_derivative(const StateVector& x, const ControlInput& u, const PlantParams& p,
                               const Environment& env, const AeroTable& aero);

StateVector airborne_derivative(const StateVector& x, const ControlInput& u,
                                const PlantParams& p, const Environment& env,
                                const AeroTable& aero);

StateVector derivative(Mode mode, const StateVector& x, const ControlInput& u,
                       const PlantParams& p, const Environment& env, const AeroTable& aero);

/// Vertical lift minus aircraft weight; the mode switch fires when positive.
double lift_margin(const StateVector& x, const PlantParams& p, const Environment& env,
                   const AeroTable& aero);

bool switch_condition(const StateVector& x, const PlantParams& p, const Environment& env,
                      const AeroTable& aero);

/// Rest state with initial line length l0 and aircraft position xg0.
StateVector initial_state(const PlantParams& p, double line_length, double position);

}  // namespace dynamics
}  // namespace awe
