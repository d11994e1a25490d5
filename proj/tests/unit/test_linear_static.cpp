#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "awe/errors.hpp"
#include "awe/linear_static.hpp"

using namespace awe;

namespace {

Aircraft wing(double span, double cl = 1.0, double cd = 0.1) {
  return Aircraft::from_span(span, 10.0, 15.0, cl, cd);
}

LinearConfig config_for(const Aircraft& ac) {
  LinearConfig cfg;
  cfg.props = linear::default_propellers(ac);
  return cfg;
}

}  // namespace

TEST_CASE("take-off speed") {
  const Environment env;
  const auto ac = wing(10.0);
  CHECK(linear::takeoff_speed(env, ac, 0.0) == doctest::Approx(15.66).epsilon(1e-3));
  CHECK(linear::takeoff_speed(env, ac, ac.mass()) ==
        doctest::Approx(std::sqrt(2.0) * linear::takeoff_speed(env, ac, 0.0)).epsilon(1e-14));
  const auto high_lift = wing(10.0, 2.0, 0.1);
  const double v1 = linear::takeoff_speed(env, ac, 0.0);
  const double v2 = linear::takeoff_speed(env, high_lift, 0.0);
  CHECK(v2 * v2 == doctest::Approx(v1 * v1 / 2).epsilon(1e-14));
}

TEST_CASE("ground power") {
  const Environment env;
  const auto ac = wing(10.0);
  auto cfg = config_for(ac);
  CHECK(linear::ground_power(env, ac, cfg, 5.0) == doctest::Approx(28.6e3).epsilon(0.01));

  // Inertia only.
  cfg.viscous_coeff = 0.0;
  const auto clean = Aircraft::from_span(10.0, 10.0, 15.0, 1.0, 1e-30);
  const double v = linear::takeoff_speed(env, clean, 2.0);
  CHECK(linear::ground_power(env, clean, cfg, 2.0) ==
        doctest::Approx((clean.mass() + 2.0) * v * v * v / (2 * cfg.travel_length)).epsilon(1e-12));

  double last = std::numeric_limits<double>::infinity();
  for (double length : {6.0, 9.0, 12.0, 18.0, 30.0}) {
    cfg.travel_length = length;
    const double p = linear::ground_power(env, ac, cfg, 0.0);
    CHECK(p < last);
    last = p;
  }
}

TEST_CASE("climb solution") {
  const Environment env;
  const auto ac = wing(10.0);
  const double weight = ac.mass() * env.g;

  const auto level = linear::climb_solution(env, ac, 0.0, 0.0);
  CHECK(level.thrust == doctest::Approx(weight * 0.1).epsilon(1e-14));
  CHECK(level.forward_speed == doctest::Approx(linear::takeoff_speed(env, ac, 0.0)).epsilon(1e-14));

  for (double cr : {0.01, 0.063, 0.1, 0.2, 0.5}) {
    const auto s = linear::climb_solution(env, ac, 3.0, cr);
    const double w = (ac.mass() + 3.0) * env.g;
    const double v2 = s.forward_speed * s.forward_speed * (1 + cr * cr);
    const double lift = 0.5 * env.rho * ac.area() * ac.lift_coeff() * v2;
    const double drag = 0.5 * env.rho * ac.area() * ac.drag_coeff() * v2;
    const double cos_g = 1.0 / std::sqrt(1 + cr * cr);
    const double sin_g = cr * cos_g;
    // Vertical and horizontal balance with horizontal thrust.
    CHECK(std::abs(lift * cos_g - drag * sin_g - w) / w < 1e-10);
    const double thrust = drag * cos_g + lift * sin_g;
    CHECK(std::abs(thrust - s.thrust) / s.thrust < 1e-12);
  }
  CHECK_THROWS_AS(linear::climb_solution(env, ac, 0.0, 10.0), DomainError);
}

TEST_CASE("climb at one metre per second") {
  const Environment env;
  const auto ac = wing(10.0);
  // Added mass of the converged assessment for this aircraft.
  const auto s = linear::climb_for_rate(env, ac, 5.0, 1.0);
  CHECK(s.forward_speed == doctest::Approx(15.9).epsilon(0.01));
  CHECK(s.climb_ratio == doctest::Approx(0.063).epsilon(0.02));
  CHECK(s.thrust == doctest::Approx(250.0).epsilon(0.03));
  CHECK(s.climb_ratio * s.forward_speed == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("small-angle thrust") {
  const Environment env;
  const auto ac = wing(10.0);
  for (double cr = 0.0; cr <= 0.2; cr += 0.01) {
    const double exact = linear::climb_solution(env, ac, 0.0, cr).thrust;
    const double approx = linear::approx_climb_thrust(env, ac, 0.0, cr);
    CHECK(std::abs(exact - approx) / exact < 0.02);
  }
}

TEST_CASE("assessment") {
  const Environment env;
  const auto ac = wing(10.0);
  const auto cfg = config_for(ac);
  const auto r = linear::assess(env, ac, cfg);
  CHECK(r.peak_onboard_power == doctest::Approx(9e3).epsilon(0.15));
  CHECK(r.added_mass == doctest::Approx(5.0).epsilon(0.2));
  CHECK(r.ground_area == doctest::Approx(192.0).epsilon(0.02));

  const double kg_per_watt = cfg.storage.mass_per_watt(cfg.target_height / cfg.climb_speed);
  CHECK(std::abs(r.added_mass - r.peak_onboard_power * kg_per_watt) / r.added_mass < 1e-10);
  const double p = vertical::actuator_disk_power(r.climb.thrust, r.climb.forward_speed,
                                                 cfg.props.disk_area(), 0.7, env.rho);
  CHECK(std::abs(p - r.peak_onboard_power) / p < 1e-10);
  CHECK(std::abs(r.peak_ground_power - linear::ground_power(env, ac, cfg, r.added_mass)) <
        1e-9 * r.peak_ground_power);

  const auto small = Aircraft::from_span(5.0, 10.0, 15.0, 1.0, 0.1);
  const auto rs = linear::assess(env, small, config_for(small));
  CHECK(rs.peak_ground_power == doctest::Approx(8e3).epsilon(0.15));
  CHECK(rs.peak_onboard_power == doctest::Approx(2e3).epsilon(0.2));
  CHECK(rs.ground_area == doctest::Approx(132.0).epsilon(0.02));
}

TEST_CASE("ground area split") {
  const auto ac = wing(20.0);
  const double floor = kPi * 12.0 * 12.0 / 4.0;
  CHECK((linear::ground_area(ac, 12.0) - floor) / ac.area() ==
        doctest::Approx(kPi * 10.0 / 4.0).epsilon(1e-13));
}

TEST_CASE("unlimited storage adds no mass") {
  const Environment env;
  const auto ac = wing(10.0);
  auto cfg = config_for(ac);
  cfg.storage.battery_energy_density = std::numeric_limits<double>::infinity();
  cfg.storage.motor_power_density = std::numeric_limits<double>::infinity();
  CHECK(linear::assess(env, ac, cfg).added_mass == 0.0);
}
