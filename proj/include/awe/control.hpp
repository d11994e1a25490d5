#pragma once

#include "awe/dynamics.hpp"

namespace awe {

struct ControllerParams {
  double winch_gain = 20.0;             // K_M1 [N m s/rad]
  double slide_gain = 50.0;             // K_M2 [N m s/rad]
  double thrust_gain = 150.0;           // K_T
  double pole = 32.0;                   // omega_p [rad/s]
  double zero1 = 0.2;                   // omega_z1 [rad/s]
  double zero2 = 2.0;                   // omega_z2 [rad/s]
  double target_forward_speed = 30.0;   // [m/s]
  double target_climb_speed = 1.0;      // [m/s]
  double max_winch_torque = 3000.0;     // [N m]
  double max_slide_torque = 290.0;      // [N m]
  double max_thrust = 350.0;            // [N]
  double sample_rate = 100.0;           // [Hz]
  bool anti_windup = true;

  void validate() const;
  double sample_time() const { return 1.0 / sample_rate; }
  bool operator==(const ControllerParams&) const = default;
};

namespace control {

/// Proportional motor laws. The thrust component is always zero here.
ControlInput motor_commands(Mode mode, const StateVector& x, const PlantParams& plant,
                            const ControllerParams& ctrl);

ControlInput saturate(const ControlInput& raw, const ControllerParams& ctrl);

}  // namespace control

/// Discrete realization (bilinear transform) of
///   C(s) = K_T (1 + s/z1)(1 + s/z2) / (s (1 + s/p))
/// split into an integrator, a direct term and a first-order lag, each in
/// transposed direct form II.
class PropellerController {
 public:
  explicit PropellerController(const ControllerParams& params);

  /// Unconstrained update; linear in the error sequence.
  double step(double error);

  /// Update with conditional integration: the integrator holds while the
  /// output is saturated and the error drives it further out. Returns the
  /// clamped thrust.
  double step_with_limits(double error);

  void reset();

  double integrator_register() const noexcept { return integrator_; }
  double lag_register() const noexcept { return lag_; }

 private:
  double gain_;
  double max_;
  double half_ts_;
  double direct_;    // coefficient of the proportional path
  double lag_gain_;  // numerator coefficient of the lag
  double lag_pole_;  // denominator coefficient of the lag
  bool anti_windup_;
  double integrator_ = 0.0;
  double lag_ = 0.0;
};

}  // namespace awe
