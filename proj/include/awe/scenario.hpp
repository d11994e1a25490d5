#pragma once

// Scenario files: a JSON document with the sections environment, vertical,
// rotational, linear, dynamic, control and aircraft. Every section is
// optional and falls back to the built-in "paper" preset. Angles use a
// `_deg` or `_rad` suffix; dumps always write radians so that a dumped
// scenario parses back to an identical configuration.

#include <optional>
#include <string>
#include <vector>

#include "awe/aero.hpp"
#include "awe/control.hpp"
#include "awe/core.hpp"
#include "awe/dynamics.hpp"
#include "awe/linear_static.hpp"
#include "awe/rotational.hpp"
#include "awe/sim.hpp"
#include "awe/vertical.hpp"

namespace awe {

struct AircraftCase {
  std::string label;
  Aircraft aircraft;
  double viscous_coeff = 0.3;    // c_v of the rail [kg/s]
  PropellerBank vertical_props;  // vertical concept
  PropellerBank linear_props;    // linear concept and simulation
  PlantParams plant;             // mass and wing area are overwritten from `aircraft`
  ControllerParams control;

  bool operator==(const AircraftCase&) const = default;
};

struct LinearSettings {
  double travel_length = 12.0;
  double target_height = 100.0;
  double climb_speed = 1.0;

  bool operator==(const LinearSettings&) const = default;
};

struct SimulationSettings {
  double duration = 30.0;
  double step = 2e-4;
  double initial_line = 2.0;
  double initial_position = 0.0;

  bool operator==(const SimulationSettings&) const = default;
};

struct Scenario {
  Environment env;
  VerticalConfig vertical;
  RotationalConfig rotational;
  LinearSettings linear;
  SimulationSettings simulation;
  AeroTable aero = AeroTable::default_table();
  std::vector<AircraftCase> aircraft;

  LinearConfig linear_config(const AircraftCase& c) const;
  SimulationConfig simulation_config(const AircraftCase& c) const;
  /// Throws ConfigError naming the offending field.
  void validate() const;
  bool operator==(const Scenario&) const = default;
};

/// Aircraft 1-3 (spans 5, 10 and 20 m) with all design, plant and control
/// parameters of the built-in reference configuration.
Scenario paper_preset();

/// `base_dir` resolves relative aero-table paths.
Scenario parse_scenario(const std::string& text, const std::string& base_dir = ".");
Scenario load_scenario(const std::string& path);
std::string dump_scenario(const Scenario& s);

/// Keeps only the aircraft with the given 1-based index; `all` keeps every one.
Scenario select_aircraft(const Scenario& s, const std::string& selector);

}  // namespace awe
