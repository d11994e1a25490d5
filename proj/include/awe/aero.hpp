#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace awe {

struct AeroSample {
  double alpha = 0.0;  // [rad]
  double cl = 0.0;
  double cd = 0.0;     // equivalent drag coefficient

  bool operator==(const AeroSample&) const = default;
};

struct AeroCoefficients {
  double cl = 0.0;
  double cd = 0.0;
};

/// Piecewise-linear lift and drag curves over angle of attack.
class AeroTable {
 public:
  /// Throws DomainError unless alpha is strictly increasing, cd > 0 and the
  /// samples cover at least [-10 deg, +25 deg].
  AeroTable(std::vector<AeroSample> samples, double trim);

  /// Finite Clark-Y-like wing, anchored at C_l = 1.0 and C_d = 0.1 for
  /// alpha = 0.24 rad.
  static AeroTable default_table();

  /// Reads `alpha_deg,cl,cd` with a header row.
  static AeroTable read_csv(std::istream& is, double trim);
  static AeroTable load_csv(const std::string& path, double trim);
  void write_csv(std::ostream& os) const;

  /// Throws OutOfEnvelopeError outside [alpha_min, alpha_max].
  AeroCoefficients coefficients(double alpha) const;

  const std::vector<AeroSample>& samples() const noexcept { return samples_; }
  double trim() const noexcept { return trim_; }
  double alpha_min() const noexcept { return samples_.front().alpha; }
  double alpha_max() const noexcept { return samples_.back().alpha; }

  bool operator==(const AeroTable&) const = default;

 private:
  std::vector<AeroSample> samples_;
  double trim_;
};

}  // namespace awe
