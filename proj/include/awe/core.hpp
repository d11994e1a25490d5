#pragma once

// Shared domain types, the crosswind power model and the take-off criteria
// scalings used to compare the three launch concepts.

#include <numbers>

namespace awe {

inline constexpr double kPi = std::numbers::pi;

constexpr double deg_to_rad(double deg) { return deg * kPi / 180.0; }
constexpr double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

struct Environment {
  double rho = 1.2;          // [kg/m^3]
  double g = 9.81;           // [m/s^2]
  double wind_speed = 15.0;  // W [m/s]

  void validate() const;
  bool operator==(const Environment&) const = default;
};

/// One rigid wing. Area and mass are derived quantities; the constructor
/// rejects any (span, aspect ratio, area) triple with A != d^2/lambda.
class Aircraft {
 public:
  Aircraft(double span, double aspect_ratio, double area, double wing_loading,
           double lift_coeff, double equiv_drag_coeff);

  static Aircraft from_span(double span, double aspect_ratio, double wing_loading,
                            double lift_coeff, double equiv_drag_coeff);

  double span() const noexcept { return span_; }
  double aspect_ratio() const noexcept { return aspect_ratio_; }
  double chord() const noexcept { return span_ / aspect_ratio_; }
  double area() const noexcept { return area_; }
  double wing_loading() const noexcept { return wing_loading_; }
  double mass() const noexcept { return wing_loading_ * area_; }
  double lift_coeff() const noexcept { return lift_coeff_; }
  double drag_coeff() const noexcept { return drag_coeff_; }
  double efficiency() const noexcept { return lift_coeff_ / drag_coeff_; }

  bool operator==(const Aircraft&) const = default;

 private:
  double span_;
  double aspect_ratio_;
  double area_;
  double wing_loading_;
  double lift_coeff_;
  double drag_coeff_;
};

struct TetherSpec {
  double diameter = 0.0;    // d_l [m]
  double drag_coeff = 1.0;  // C_d,l
  double length = 0.0;      // l [m]
  double reel_speed = 0.0;  // dl/dt [m/s], positive when reeling out
};

struct CriteriaScalings {
  double eta_ground_power = 0.0;
  double eta_onboard_power = 0.0;
  double eta_mass = 0.0;
  double area_floor = 0.0;  // [m^2]
  double eta_area = 0.0;
};

/// Wing drag plus the distributed drag of a straight line of length l.
double equivalent_drag(double wing_drag, const TetherSpec& tether, double area);

/// Traction force on the tether for a wing flying crosswind at the given
/// elevation and azimuth [rad].
double crosswind_tether_force(const Environment& env, const Aircraft& ac,
                              const TetherSpec& tether, double elevation, double azimuth);

double crosswind_power(const Environment& env, const Aircraft& ac, const TetherSpec& tether,
                       double elevation, double azimuth);

/// Traction power at the optimal reel-out speed W/3 with the wing straight downwind.
double peak_crosswind_power(const Environment& env, const Aircraft& ac);

CriteriaScalings criteria_from_assessment(double peak_ground_power, double peak_onboard_power,
                                          double added_mass, double ground_area,
                                          double area_floor, const Aircraft& ac,
                                          const Environment& env);

}  // namespace awe
