#pragma once

// Rotational take-off: the wing is towed around by a rotating arm of length R
// while line is paid out. For a fixed line length l and vertical inclination
// gamma_V, the steady state is parameterized by the roll angle zeta, the arm
// rate omega and the horizontal line angle gamma_H; two force balances
// perpendicular to the line leave one free direction, which is used to
// minimize the power needed to drive the arm.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "awe/core.hpp"

namespace awe {

struct RotationalConfig {
  double zeta_max = deg_to_rad(50.0);   // max |zeta - gamma_V| [rad]
  double reel_speed = 1.6;              // v_l [m/s]
  double climb_speed = 1.0;             // v_c [m/s]
  double gamma_v_min_user = 0.0;        // lower inclination bound before the geometric limit [rad]
  double gamma_v_max = deg_to_rad(90.0);
  double arm_min = 30.0;                // [m]
  double arm_max = 50.0;                // [m]
  double line_max = 100.0;              // l_bar [m]
  int line_grid = 60;
  int gamma_v_grid = 26;
  int arm_grid = 21;
  int gamma_h_grid = 60;                // coarse scan before golden-section refinement

  void validate() const;
  /// max(user bound, asin(v_c / v_l)).
  double gamma_v_min() const;
  bool operator==(const RotationalConfig&) const = default;
};

struct ArmGeometry {
  double psi = 0.0;      // [rad]
  double r_prime = 0.0;  // distance from the rotation axis to the wing [m]
};

struct EquilibriumPoint {
  double zeta = 0.0;     // [rad]
  double omega = 0.0;    // [rad/s]
  double gamma_h = 0.0;  // [rad]
};

struct EquilibriumResiduals {
  double tangential = 0.0;  // in-plane balance, normalized by m g
  double vertical = 0.0;    // balance in the plane containing the line, normalized by m g
};

struct RotationalEquilibrium {
  double arm_length = 0.0;   // R [m]
  double line_length = 0.0;  // l [m]
  double gamma_h = 0.0;
  double gamma_v = 0.0;
  double zeta = 0.0;
  double omega = 0.0;
  double psi = 0.0;
  double r_prime = 0.0;
  double tangential_speed = 0.0;  // R' omega [m/s]
  double tension = 0.0;           // [N]
  double tension_perp = 0.0;      // [N]
  double power = 0.0;             // R T_perp omega [W]
  double residual_norm = 0.0;
};

struct PeakPowerProfile {
  double arm_length = 0.0;
  double gamma_v = 0.0;  // minimizing inclination
  double power = 0.0;    // min over gamma_V of max over l [W]
  RotationalEquilibrium critical;  // equilibrium at the maximizing line length
  double max_omega = 0.0;          // over the line range at the chosen gamma_V
  double max_tip_speed = 0.0;      // omega R [m/s]
};

struct ArmOptimum {
  double arm_length = 0.0;   // R_opt [m]
  double power = 0.0;        // [W]
  double ground_area = 0.0;  // pi R_opt^2 [m^2]
  PeakPowerProfile profile;
  std::vector<std::optional<PeakPowerProfile>> per_arm;  // in arm-grid order
};

struct SweepRow {
  double arm_length = 0.0;
  double line_length = 0.0;
  double gamma_v = 0.0;
  double gamma_h = 0.0;
  double zeta = 0.0;
  double omega = 0.0;
  double power = 0.0;
  bool feasible = false;
};

struct MaxGammaPoint {
  double line_length = 0.0;
  std::optional<double> gamma_v_max;  // empty when no inclination is feasible
};

namespace rotational {

ArmGeometry geometry(double arm, double line, double gamma_v, double gamma_h);

EquilibriumResiduals equilibrium_residuals(const Environment& env, const Aircraft& ac, double arm,
                                           double line, double gamma_v,
                                           const EquilibriumPoint& point);

/// Line tension of the force balance along the line.
double tension(const Environment& env, const Aircraft& ac, double arm, double line,
               double gamma_v, const EquilibriumPoint& point);

/// Damped Newton on (zeta, omega) at fixed gamma_H; empty when no start converges.
std::optional<RotationalEquilibrium> solve_equilibrium(const Environment& env, const Aircraft& ac,
                                                       double arm, double line, double gamma_v,
                                                       double gamma_h);

/// Minimum-power equilibrium over gamma_H subject to the roll constraint.
std::optional<RotationalEquilibrium> min_power_at(const Environment& env, const Aircraft& ac,
                                                  const RotationalConfig& cfg, double arm,
                                                  double line, double gamma_v);

std::vector<double> line_grid(const RotationalConfig& cfg);
std::vector<double> gamma_v_grid(const RotationalConfig& cfg);
std::vector<double> arm_grid(const RotationalConfig& cfg);

std::optional<PeakPowerProfile> peak_power_profile(const Environment& env, const Aircraft& ac,
                                                   const RotationalConfig& cfg, double arm);

/// Throws InfeasibleError when no arm length in range admits a solution.
ArmOptimum optimal_arm(const Environment& env, const Aircraft& ac, const RotationalConfig& cfg);

/// Largest feasible gamma_V per line length: a descending 2 deg scan, then
/// bisection to 0.1 deg.
std::vector<MaxGammaPoint> max_gamma_curve(const Environment& env, const Aircraft& ac,
                                           const RotationalConfig& cfg, double arm,
                                           const std::vector<double>& lines);

std::vector<SweepRow> power_vs_arm(const Environment& env, const Aircraft& ac,
                                   const RotationalConfig& cfg, double line, double gamma_v,
                                   const std::vector<double>& arms);

std::vector<SweepRow> power_vs_gamma(const Environment& env, const Aircraft& ac,
                                     const RotationalConfig& cfg, double arm, double line,
                                     const std::vector<double>& gammas);

/// Smallest arm length (to `resolution`) for which gamma_V is reachable over
/// the whole line range; empty if not reachable within [lo, hi].
std::optional<double> min_feasible_arm(const Environment& env, const Aircraft& ac,
                                       const RotationalConfig& cfg, double gamma_v, double lo,
                                       double hi, double resolution = 0.5);

SweepRow to_row(double arm, double line, double gamma_v,
                const std::optional<RotationalEquilibrium>& eq);

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

}  // namespace rotational
}  // namespace awe
