#include "awe/aero.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "awe/core.hpp"
#include "awe/errors.hpp"

namespace awe {

AeroTable::AeroTable(std::vector<AeroSample> samples, double trim)
    : samples_(std::move(samples)), trim_(trim) {
  if (samples_.size() < 2) throw DomainError("aero table needs at least two samples");
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    if (!(samples_[i].cd > 0.0)) throw DomainError("aero table drag coefficients must be positive");
    if (i > 0 && !(samples_[i].alpha > samples_[i - 1].alpha)) {
      throw DomainError("aero table angles must be strictly increasing");
    }
  }
  constexpr double kSlack = 1e-9;
  if (alpha_min() > deg_to_rad(-10.0) + kSlack || alpha_max() < deg_to_rad(25.0) - kSlack) {
    throw DomainError("aero table must cover at least [-10, 25] deg");
  }
  if (trim_ < alpha_min() || trim_ > alpha_max()) {
    throw DomainError("trim angle outside the aero table");
  }
}

AeroTable AeroTable::default_table() {
  constexpr double kTrim = 0.24;
  auto deg = [](double a) { return deg_to_rad(a); };
  return AeroTable({{deg(-10.0), -0.42, 0.080},
                    {deg(-6.0), -0.16, 0.062},
                    {deg(-4.0), 0.00, 0.056},
                    {deg(0.0), 0.32, 0.056},
                    {deg(4.0), 0.61, 0.063},
                    {deg(8.0), 0.83, 0.074},
                    {deg(12.0), 0.96, 0.091},
                    {kTrim, 1.00, 0.100},
                    {deg(16.0), 1.05, 0.115},
                    {deg(18.0), 1.08, 0.132},
                    {deg(20.0), 1.04, 0.155},
                    {deg(22.0), 0.97, 0.180},
                    {deg(25.0), 0.89, 0.220},
                    {deg(30.0), 0.80, 0.290},
                    {deg(35.0), 0.74, 0.360}},
                   kTrim);
}

AeroTable AeroTable::read_csv(std::istream& is, double trim) {
  std::string line;
  if (!std::getline(is, line)) throw ConfigError("aero table: empty input");
  std::vector<AeroSample> samples;
  int lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream row(line);
    double a, cl, cd;
    if (!(row >> a >> cl >> cd)) {
      throw ConfigError("aero table: malformed row at line " + std::to_string(lineno));
    }
    samples.push_back({deg_to_rad(a), cl, cd});
  }
  try {
    return AeroTable(std::move(samples), trim);
  } catch (const DomainError& e) {
    throw ConfigError(std::string("aero table: ") + e.what());
  }
}

AeroTable AeroTable::load_csv(const std::string& path, double trim) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open aero table '" + path + "'");
  return read_csv(in, trim);
}

void AeroTable::write_csv(std::ostream& os) const {
  os << "alpha_deg,cl,cd\n";
  const auto old = os.precision(17);
  for (const auto& s : samples_) os << rad_to_deg(s.alpha) << ',' << s.cl << ',' << s.cd << '\n';
  os.precision(old);
}

AeroCoefficients AeroTable::coefficients(double alpha) const {
  if (!(alpha >= alpha_min() && alpha <= alpha_max())) {
    throw OutOfEnvelopeError("angle of attack " + std::to_string(rad_to_deg(alpha)) +
                             " deg outside the aerodynamic table");
  }
  auto hi = std::upper_bound(samples_.begin(), samples_.end(), alpha,
                             [](double a, const AeroSample& s) { return a < s.alpha; });
  if (hi == samples_.end()) return {samples_.back().cl, samples_.back().cd};
  const auto lo = hi - 1;
  const double t = (alpha - lo->alpha) / (hi->alpha - lo->alpha);
  return {lo->cl + t * (hi->cl - lo->cl), lo->cd + t * (hi->cd - lo->cd)};
}

}  // namespace awe
