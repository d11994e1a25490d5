#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "awe/aero.hpp"
#include "awe/control.hpp"
#include "awe/dynamics.hpp"
#include "awe/errors.hpp"
#include "awe/vertical.hpp"

namespace awe {

struct SimulationConfig {
  PlantParams plant;
  ControllerParams control;
  AeroTable aero = AeroTable::default_table();
  Environment env;
  PropellerBank propellers{2, 0.5, 0.7};
  double duration = 30.0;         // [s]
  double step = 2e-4;             // RK4 step [s]
  double initial_line = 2.0;      // l_0 [m]
  double initial_position = 0.0;  // x_g,0 [m]

  void validate() const;
};

struct TrajectoryRecord {
  double t = 0.0;
  StateVector x{};
  Mode mode = Mode::Carried;
  ControlInput u;  // held over [t, t + 1/f_s)
  double tension = 0.0;
  double lift = 0.0;
  double drag = 0.0;
  double power_winch = 0.0;       // u1 x2 [W]
  double power_slide = 0.0;       // u2 x4 [W]
  double power_propeller = 0.0;   // shaft power from the actuator-disk relation [W]
};

struct SwitchEvent {
  double time = 0.0;
  StateVector x{};
};

struct Trajectory {
  std::vector<TrajectoryRecord> records;
  std::optional<SwitchEvent> lift_off;
};

class SimulationDivergedError : public Error {
 public:
  SimulationDivergedError(const std::string& what, Trajectory partial)
      : Error(what), partial_(std::move(partial)) {}
  const Trajectory& partial() const noexcept { return partial_; }

 private:
  Trajectory partial_;
};

struct PowerSummary {
  double peak_ground_W = 0.0;           // slide motor, carried phase
  double peak_winch_W = 0.0;            // winch motor, carried phase
  double peak_ground_combined_W = 0.0;  // max of |P_M1| + |P_M2|, carried phase
  double peak_propeller_W = 0.0;
  double takeoff_time_s = 0.0;
  double takeoff_distance_m = 0.0;
  double takeoff_speed_ms = 0.0;
  double slide_travel_m = 0.0;
  double final_climb_speed_ms = 0.0;    // mean vertical speed over the last 2 s
  double peak_tension_N = 0.0;
  double peak_tension_carried_N = 0.0;
};

namespace sim {

/// Fixed-step RK4 with zero-order-hold control at f_s. The lift-off instant
/// is located by bisection within the step. Records are taken at f_s.
Trajectory run(const SimulationConfig& cfg);

/// Throws DomainError when the trajectory has no lift-off.
PowerSummary power_summary(const Trajectory& traj, const SimulationConfig& cfg);

void write_csv(std::ostream& os, const Trajectory& traj);

}  // namespace sim
}  // namespace awe
