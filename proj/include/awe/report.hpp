#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "awe/scenario.hpp"

namespace awe {

enum class Format { Text, Json, Csv };

/// Throws ConfigError for anything but text, json or csv.
Format parse_format(const std::string& name);

struct ConceptResult {
  std::string name;
  bool feasible = true;
  std::string note;  // diagnostic when infeasible
  double peak_ground_W = 0.0;
  double peak_onboard_W = 0.0;
  double added_mass_kg = 0.0;
  double ground_area_m2 = 0.0;
  double area_floor_m2 = 0.0;
  std::optional<CriteriaScalings> criteria;  // empty when the reference power is zero
};

struct AircraftReport {
  std::string label;
  double span = 0.0;
  double area = 0.0;
  double mass = 0.0;
  double peak_crosswind_W = 0.0;
  VerticalAssessment vertical;
  std::optional<ArmOptimum> rotational;
  LinearAssessment linear;
  std::vector<ConceptResult> concepts;  // vertical, rotational, linear
};

std::vector<AircraftReport> assess(const Scenario& s);
void write_assess(std::ostream& os, const std::vector<AircraftReport>& reports, Format f);

struct ComparisonRow {
  std::string label;
  double peak_crosswind_W = 0.0;
  double static_ground_W = 0.0;
  double static_propeller_W = 0.0;
  PowerSummary simulated;
};

/// Throws SimulationDivergedError if any run fails.
std::vector<ComparisonRow> compare(const Scenario& s);
void write_compare(std::ostream& os, const std::vector<ComparisonRow>& rows, Format f);

/// Summary block for one simulation; `summary` is empty when the aircraft
/// never left the slide.
void write_simulation_summary(std::ostream& os, const std::string& label,
                              const std::optional<PowerSummary>& summary, double duration,
                              Format f);

/// Three significant digits, without exponent notation.
std::string format_sig3(double v);

}  // namespace awe
