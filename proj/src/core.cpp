#include "awe/core.hpp"

#include <cmath>
#include <string>

#include "awe/errors.hpp"

namespace awe {

void Environment::validate() const {
  if (!(rho > 0.0)) throw DomainError("air density must be positive");
  if (!(g > 0.0)) throw DomainError("gravitational acceleration must be positive");
  if (!(wind_speed >= 0.0)) throw DomainError("wind speed must be non-negative");
}

Aircraft::Aircraft(double span, double aspect_ratio, double area, double wing_loading,
                   double lift_coeff, double equiv_drag_coeff)
    : span_(span),
      aspect_ratio_(aspect_ratio),
      area_(area),
      wing_loading_(wing_loading),
      lift_coeff_(lift_coeff),
      drag_coeff_(equiv_drag_coeff) {
  if (!(span > 0.0 && aspect_ratio > 0.0 && area > 0.0 && wing_loading > 0.0 &&
        lift_coeff > 0.0 && equiv_drag_coeff > 0.0)) {
    throw DomainError("aircraft parameters must all be positive");
  }
  const double expected = span * span / aspect_ratio;
  if (std::abs(area - expected) > 1e-9 * expected) {
    throw DomainError("wing area " + std::to_string(area) + " inconsistent with span^2/aspect (" +
                      std::to_string(expected) + ")");
  }
  if (!(lift_coeff / equiv_drag_coeff > 1.0)) {
    throw DomainError("aerodynamic efficiency C_l/C_d must exceed 1");
  }
}

Aircraft Aircraft::from_span(double span, double aspect_ratio, double wing_loading,
                             double lift_coeff, double equiv_drag_coeff) {
  return Aircraft(span, aspect_ratio, span * span / aspect_ratio, wing_loading, lift_coeff,
                  equiv_drag_coeff);
}

double equivalent_drag(double wing_drag, const TetherSpec& tether, double area) {
  if (!(area > 0.0)) throw DomainError("equivalent_drag: area must be positive");
  return wing_drag + tether.diameter * tether.length * tether.drag_coeff / (4.0 * area);
}

double crosswind_tether_force(const Environment& env, const Aircraft& ac,
                              const TetherSpec& tether, double elevation, double azimuth) {
  const double cl = ac.lift_coeff();
  const double cd = ac.drag_coeff();
  const double apparent =
      env.wind_speed * std::cos(azimuth) * std::cos(elevation) - tether.reel_speed;
  return 0.5 * env.rho * ac.area() * (cl * cl * cl) / (cd * cd) * apparent * apparent;
}

double crosswind_power(const Environment& env, const Aircraft& ac, const TetherSpec& tether,
                       double elevation, double azimuth) {
  return crosswind_tether_force(env, ac, tether, elevation, azimuth) * tether.reel_speed;
}

double peak_crosswind_power(const Environment& env, const Aircraft& ac) {
  const double cl = ac.lift_coeff();
  const double cd = ac.drag_coeff();
  const double w = env.wind_speed;
  return 2.0 / 27.0 * env.rho * ac.area() * (cl * cl * cl) / (cd * cd) * w * w * w;
}

CriteriaScalings criteria_from_assessment(double peak_ground_power, double peak_onboard_power,
                                          double added_mass, double ground_area,
                                          double area_floor, const Aircraft& ac,
                                          const Environment& env) {
  const double reference = peak_crosswind_power(env, ac);
  if (!(reference > 0.0)) {
    throw DomainError("criteria undefined: peak crosswind power is zero");
  }
  CriteriaScalings s;
  s.eta_ground_power = peak_ground_power / reference;
  s.eta_onboard_power = peak_onboard_power / reference;
  s.eta_mass = added_mass / ac.mass();
  s.area_floor = area_floor;
  s.eta_area = (ground_area - area_floor) / ac.area();
  return s;
}

}  // namespace awe
