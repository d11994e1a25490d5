#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "awe/errors.hpp"
#include "awe/sim.hpp"
#include "oracles.hpp"

using namespace awe;

namespace {

SimulationConfig short_run(double duration) {
  SimulationConfig cfg;
  cfg.duration = duration;
  return cfg;
}

}  // namespace

TEST_CASE("rest with zero gains") {
  auto cfg = short_run(5.0);
  cfg.control.winch_gain = cfg.control.slide_gain = cfg.control.thrust_gain = 0.0;
  const auto traj = sim::run(cfg);
  const auto x0 = dynamics::initial_state(cfg.plant, cfg.initial_line, cfg.initial_position);
  for (const auto& r : traj.records) {
    CHECK(r.x == x0);
    CHECK(r.mode == Mode::Carried);
  }
  CHECK_FALSE(traj.lift_off);
  CHECK_THROWS_AS(sim::power_summary(traj, cfg), DomainError);
}

TEST_CASE("sampling and mode sequence") {
  const auto cfg = short_run(6.0);
  const auto traj = sim::run(cfg);
  REQUIRE(traj.records.size() == 601);
  REQUIRE(traj.lift_off);
  int switches = 0;
  for (std::size_t k = 0; k < traj.records.size(); ++k) {
    CHECK(traj.records[k].t == doctest::Approx(k * 0.01).epsilon(1e-12));
    if (k > 0) {
      CHECK(traj.records[k].t > traj.records[k - 1].t);
      if (traj.records[k].mode != traj.records[k - 1].mode) {
        ++switches;
        CHECK(traj.records[k].mode == Mode::Airborne);
        CHECK(traj.records[k - 1].t <= traj.lift_off->time);
        CHECK(traj.records[k].t >= traj.lift_off->time);
      }
    }
    if (traj.records[k].mode == Mode::Carried) CHECK(traj.records[k].u.thrust == 0.0);
  }
  CHECK(switches == 1);
}

TEST_CASE("determinism") {
  const auto cfg = short_run(8.0);
  const auto a = sim::run(cfg);
  const auto b = sim::run(cfg);
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t k = 0; k < a.records.size(); ++k) {
    CHECK(a.records[k].x == b.records[k].x);
    CHECK(a.records[k].u == b.records[k].u);
  }
  CHECK(a.lift_off->time == b.lift_off->time);
}

TEST_CASE("aircraft rides on the slide") {
  const auto cfg = short_run(4.0);
  const auto traj = sim::run(cfg);
  for (const auto& r : traj.records) {
    if (r.mode != Mode::Carried) continue;
    CHECK(std::abs(r.x[5] - cfg.plant.pulley_radius * r.x[3]) < 1e-9);
    CHECK(r.x[7] == 0.0);
  }
}

TEST_CASE("lift-off state") {
  const auto cfg = short_run(4.0);
  const auto traj = sim::run(cfg);
  REQUIRE(traj.lift_off);
  const auto& x = traj.lift_off->x;
  const double margin = dynamics::lift_margin(x, cfg.plant, cfg.env, cfg.aero);
  CHECK(margin > 0.0);
  CHECK(margin < 1e-3 * cfg.plant.aircraft_mass * cfg.env.g);
  CHECK(std::hypot(x[5], x[7]) == doctest::Approx(15.7).epsilon(0.5 / 15.7));
}

TEST_CASE("energy balance up to lift-off") {
  const auto b = oracle::carried_energy_balance(short_run(10.0));
  REQUIRE(b.lifted);
  CHECK(b.energy_gain > 0.0);
  CHECK(b.relative_error() < 0.005);
}

TEST_CASE("halving the step in the carried phase") {
  const auto a_cfg = short_run(1.7);
  auto b_cfg = a_cfg;
  b_cfg.step = a_cfg.step / 2.0;
  const auto a = sim::run(a_cfg);
  const auto b = sim::run(b_cfg);
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t k = 0; k < a.records.size(); ++k) {
    REQUIRE(a.records[k].mode == Mode::Carried);
    for (int i = 0; i < 10; ++i) {
      const double ref = b.records[k].x[i];
      CHECK(std::abs(a.records[k].x[i] - ref) <= 1e-6 * std::max(1.0, std::abs(ref)));
    }
  }
}

TEST_CASE("summary of the reference run") {
  const SimulationConfig cfg;
  const auto traj = sim::run(cfg);
  const auto s = sim::power_summary(traj, cfg);
  CHECK(s.takeoff_speed_ms == doctest::Approx(15.7).epsilon(0.5 / 15.7));
  CHECK(s.peak_ground_W > 0.0);
  CHECK(s.peak_ground_combined_W >= s.peak_ground_W);
  CHECK(s.peak_propeller_W > 0.0);
  CHECK(s.takeoff_time_s == traj.lift_off->time);
  CHECK(s.takeoff_distance_m == traj.lift_off->x[4]);
}

TEST_CASE("short horizon never leaves the slide") {
  const auto traj = sim::run(short_run(0.1));
  CHECK_FALSE(traj.lift_off);
  CHECK(traj.records.size() == 11);
}

TEST_CASE("first-order pitch rate loop diverges") {
  auto cfg = short_run(30.0);
  cfg.plant.pitch_loop = PitchLoop::RateTracking;
  try {
    sim::run(cfg);
    FAIL("expected divergence");
  } catch (const SimulationDivergedError& e) {
    CHECK_FALSE(e.partial().records.empty());
    CHECK(e.partial().lift_off);
  }
}

TEST_CASE("csv export") {
  const auto traj = sim::run(short_run(0.05));
  std::ostringstream os;
  sim::write_csv(os, traj);
  std::istringstream in(os.str());
  std::string header;
  std::getline(in, header);
  CHECK(header ==
        "t_s,x1,x2,x3,x4,x5,x6,x7,x8,x9,x10,mode,u1_Nm,u2_Nm,u3_N,tension_N,P_M1_W,P_M2_W,P_prop_W");
  int rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  CHECK(rows == 6);
}

TEST_CASE("configuration checks") {
  auto cfg = short_run(1.0);
  cfg.step = 0.006;
  CHECK_THROWS_AS(sim::run(cfg), DomainError);
  cfg.step = 3e-4;
  CHECK_THROWS_AS(sim::run(cfg), DomainError);
  cfg = short_run(0.0);
  CHECK_THROWS_AS(sim::run(cfg), DomainError);
}
