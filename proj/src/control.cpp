#include "awe/control.hpp"

#include <algorithm>
#include <cmath>

#include "awe/errors.hpp"

namespace awe {

void ControllerParams::validate() const {
  if (!(winch_gain >= 0.0 && slide_gain >= 0.0 && thrust_gain >= 0.0)) {
    throw DomainError("controller gains must be non-negative");
  }
  if (!(zero1 > 0.0 && zero2 > 0.0 && pole > zero1)) {
    throw DomainError("controller corners must satisfy pole > zero1 > 0, zero2 > 0");
  }
  if (!(max_winch_torque >= 0.0 && max_slide_torque >= 0.0 && max_thrust >= 0.0)) {
    throw DomainError("saturation limits must be non-negative");
  }
  if (!(sample_rate > 0.0)) throw DomainError("sample rate must be positive");
}

namespace control {

ControlInput motor_commands(Mode mode, const StateVector& x, const PlantParams& plant,
                            const ControllerParams& ctrl) {
  ControlInput u;
  if (mode == Mode::Carried) {
    u.winch_torque = ctrl.winch_gain * (ctrl.target_forward_speed - plant.winch_radius * x[1]);
    u.slide_torque = ctrl.slide_gain * (ctrl.target_forward_speed - plant.pulley_radius * x[3]);
  } else {
    const double speed = std::hypot(x[5], x[7]);
    u.winch_torque = ctrl.winch_gain * (speed - plant.winch_radius * x[1]);
    u.slide_torque = -ctrl.slide_gain * plant.pulley_radius * x[3];
  }
  return u;
}

ControlInput saturate(const ControlInput& raw, const ControllerParams& ctrl) {
  return {std::clamp(raw.winch_torque, -ctrl.max_winch_torque, ctrl.max_winch_torque),
          std::clamp(raw.slide_torque, -ctrl.max_slide_torque, ctrl.max_slide_torque),
          std::clamp(raw.thrust, 0.0, ctrl.max_thrust)};
}

}  // namespace control

PropellerController::PropellerController(const ControllerParams& params)
    : gain_(params.thrust_gain),
      max_(params.max_thrust),
      half_ts_(0.5 * params.sample_time()),
      anti_windup_(params.anti_windup) {
  params.validate();
  const double p = params.pole;
  const double z1 = params.zero1;
  const double z2 = params.zero2;
  // (1+s/z1)(1+s/z2) / (s(1+s/p)) = 1/s + b + c/(1+s/p)
  direct_ = p / (z1 * z2);
  const double c = -(1.0 - p / z1) * (1.0 - p / z2) / p;
  const double k = 2.0 / params.sample_time();
  lag_gain_ = c * p / (k + p);
  lag_pole_ = (p - k) / (k + p);
}

double PropellerController::step(double error) {
  const double yi = half_ts_ * error + integrator_;
  integrator_ = half_ts_ * error + yi;
  const double yl = lag_gain_ * error + lag_;
  lag_ = lag_gain_ * error - lag_pole_ * yl;
  return gain_ * (yi + direct_ * error + yl);
}

double PropellerController::step_with_limits(double error) {
  double yi = half_ts_ * error + integrator_;
  const double yl = lag_gain_ * error + lag_;
  double raw = gain_ * (yi + direct_ * error + yl);
  const bool pushing_out = (raw > max_ && error > 0.0) || (raw < 0.0 && error < 0.0);
  if (anti_windup_ && pushing_out) {
    yi = integrator_;
    raw = gain_ * (yi + direct_ * error + yl);
    integrator_ = yi;
  } else {
    integrator_ = half_ts_ * error + yi;
  }
  lag_ = lag_gain_ * error - lag_pole_ * yl;
  return std::clamp(raw, 0.0, max_);
}

void PropellerController::reset() {
  integrator_ = 0.0;
  lag_ = 0.0;
}

}  // namespace awe
