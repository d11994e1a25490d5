#include "awe/rotational.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <ostream>

#include "awe/errors.hpp"
#include "awe/parallel.hpp"

namespace awe {

void RotationalConfig::validate() const {
  if (!(zeta_max > 0.0 && zeta_max < kPi / 2.0)) {
    throw DomainError("zeta_max must lie in (0, pi/2)");
  }
  if (!(reel_speed > 0.0)) throw DomainError("reel speed must be positive");
  if (!(climb_speed >= 0.0 && climb_speed <= reel_speed)) {
    throw DomainError("climb speed must lie in [0, reel speed]");
  }
  if (!(arm_min > 0.0 && arm_max >= arm_min)) throw DomainError("invalid arm range");
  if (!(line_max >= 0.0)) throw DomainError("line_max must be non-negative");
  if (!(gamma_v_max > 0.0 && gamma_v_max <= kPi / 2.0)) {
    throw DomainError("gamma_v_max must lie in (0, pi/2]");
  }
  if (line_grid < 2 || gamma_v_grid < 2 || arm_grid < 2 || gamma_h_grid < 2) {
    throw DomainError("grid sizes must be at least 2");
  }
  if (gamma_v_min() > gamma_v_max) throw DomainError("empty inclination range");
}

double RotationalConfig::gamma_v_min() const {
  return std::max(gamma_v_min_user, std::asin(climb_speed / reel_speed));
}

namespace rotational {
namespace {

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  return v;
}

struct Forces {
  ArmGeometry geo;
  double lift = 0.0;
  double drag = 0.0;
  double centrifugal = 0.0;
  double offset = 0.0;  // gamma_H - psi
};

Forces forces_at(const Environment& env, const Aircraft& ac, double arm, double line,
                 double gamma_v, const EquilibriumPoint& p) {
  Forces f;
  f.geo = geometry(arm, line, gamma_v, p.gamma_h);
  const double v = f.geo.r_prime * p.omega;
  const double q = 0.5 * env.rho * ac.area() * v * v;
  f.lift = q * ac.lift_coeff();
  f.drag = q * ac.drag_coeff();
  f.centrifugal = ac.mass() * v * v / f.geo.r_prime;
  f.offset = p.gamma_h - f.geo.psi;
  return f;
}

double wrap_angle(double a) {
  a = std::fmod(a + kPi, 2.0 * kPi);
  if (a < 0.0) a += 2.0 * kPi;
  return a - kPi;
}

struct NewtonResult {
  bool converged = false;
  double zeta = 0.0;
  double omega = 0.0;
  double residual = std::numeric_limits<double>::infinity();
};

// Damped Newton with a central-difference Jacobian and backtracking on |r|^2.
NewtonResult newton(const Environment& env, const Aircraft& ac, double arm, double line,
                    double gamma_v, double gamma_h, double zeta0, double omega0) {
  constexpr int kMaxIterations = 50;
  constexpr double kStep = 1e-6;
  constexpr double kTolerance = 1e-11;

  auto eval = [&](double z, double w) {
    const auto r = equilibrium_residuals(env, ac, arm, line, gamma_v, {z, w, gamma_h});
    return std::array<double, 2>{r.tangential, r.vertical};
  };
  auto norm2 = [](const std::array<double, 2>& r) { return r[0] * r[0] + r[1] * r[1]; };

  NewtonResult out;
  double z = zeta0;
  double w = omega0;
  auto r = eval(z, w);
  for (int it = 0; it < kMaxIterations; ++it) {
    if (std::max(std::abs(r[0]), std::abs(r[1])) < kTolerance) {
      out = {true, wrap_angle(z), w, std::sqrt(norm2(r))};
      return out;
    }
    const auto rzp = eval(z + kStep, w);
    const auto rzm = eval(z - kStep, w);
    const auto rwp = eval(z, w + kStep);
    const auto rwm = eval(z, w - kStep);
    const double j00 = (rzp[0] - rzm[0]) / (2.0 * kStep);
    const double j10 = (rzp[1] - rzm[1]) / (2.0 * kStep);
    const double j01 = (rwp[0] - rwm[0]) / (2.0 * kStep);
    const double j11 = (rwp[1] - rwm[1]) / (2.0 * kStep);
    const double det = j00 * j11 - j01 * j10;
    if (!std::isfinite(det) || std::abs(det) < 1e-300) break;
    const double dz = -(j11 * r[0] - j01 * r[1]) / det;
    const double dw = -(-j10 * r[0] + j00 * r[1]) / det;

    double t = 1.0;
    // omega must stay positive.
    while (w + t * dw <= 0.0 && t > 1e-12) t *= 0.5;
    const double current = norm2(r);
    bool improved = false;
    for (int ls = 0; ls < 40; ++ls) {
      const auto trial = eval(z + t * dz, w + t * dw);
      if (std::isfinite(trial[0]) && std::isfinite(trial[1]) &&
          norm2(trial) < (1.0 - 1e-4 * t) * current) {
        z += t * dz;
        w += t * dw;
        r = trial;
        improved = true;
        break;
      }
      t *= 0.5;
    }
    if (!improved) break;
    // Far from a root after many steps: treat as stalled rather than spend the full budget.
    if (it >= 10 && std::max(std::abs(r[0]), std::abs(r[1])) > 1e-3) break;
  }
  if (std::max(std::abs(r[0]), std::abs(r[1])) < kTolerance) {
    out = {true, wrap_angle(z), w, std::sqrt(norm2(r))};
  }
  return out;
}

RotationalEquilibrium assemble(const Environment& env, const Aircraft& ac, double arm,
                               double line, double gamma_v, const EquilibriumPoint& p,
                               double residual) {
  const auto geo = geometry(arm, line, gamma_v, p.gamma_h);
  RotationalEquilibrium e;
  e.arm_length = arm;
  e.line_length = line;
  e.gamma_h = p.gamma_h;
  e.gamma_v = gamma_v;
  e.zeta = p.zeta;
  e.omega = p.omega;
  e.psi = geo.psi;
  e.r_prime = geo.r_prime;
  e.tangential_speed = geo.r_prime * p.omega;
  e.tension = tension(env, ac, arm, line, gamma_v, p);
  e.tension_perp = e.tension * std::sin(p.gamma_h) * std::cos(gamma_v);
  e.power = arm * e.tension_perp * p.omega;
  e.residual_norm = residual;
  return e;
}

bool admissible(const RotationalConfig& cfg, const RotationalEquilibrium& e) {
  return std::abs(e.zeta - e.gamma_v) <= cfg.zeta_max && e.tension >= 0.0 && e.omega > 0.0;
}

}  // namespace

ArmGeometry geometry(double arm, double line, double gamma_v, double gamma_h) {
  if (!(arm > 0.0)) throw DomainError("arm length must be positive");
  if (!(line >= 0.0)) throw DomainError("line length must be non-negative");
  const double along = arm + line * std::cos(gamma_v) * std::cos(gamma_h);
  const double across = line * std::cos(gamma_v) * std::sin(gamma_h);
  ArmGeometry g;
  g.psi = std::atan(across / along);
  const double c = std::cos(g.psi);
  if (!(std::abs(c) > 1e-12)) throw DegenerateGeometryError("cos(psi) vanishes");
  g.r_prime = along / c;
  return g;
}

EquilibriumResiduals equilibrium_residuals(const Environment& env, const Aircraft& ac, double arm,
                                           double line, double gamma_v,
                                           const EquilibriumPoint& point) {
  const auto f = forces_at(env, ac, arm, line, gamma_v, point);
  const double weight = ac.mass() * env.g;
  const double so = std::sin(f.offset);
  const double co = std::cos(f.offset);
  EquilibriumResiduals r;
  r.tangential = (f.drag * co - (f.lift * std::cos(point.zeta) + f.centrifugal) * so) / weight;
  r.vertical = (f.lift * co * std::sin(point.zeta - gamma_v) - weight * std::cos(gamma_v) -
                (f.centrifugal * co + f.drag * so) * std::sin(gamma_v)) /
               weight;
  return r;
}

double tension(const Environment& env, const Aircraft& ac, double arm, double line,
               double gamma_v, const EquilibriumPoint& point) {
  const auto f = forces_at(env, ac, arm, line, gamma_v, point);
  const double so = std::sin(f.offset);
  const double co = std::cos(f.offset);
  return f.lift * co * std::cos(point.zeta - gamma_v) - ac.mass() * env.g * std::sin(gamma_v) +
         (f.drag * so + f.centrifugal * co) * std::cos(gamma_v);
}

namespace {

// Tries the hint first (continuation along gamma_H), then the standard starts.
std::optional<RotationalEquilibrium> solve_with_hint(const Environment& env, const Aircraft& ac,
                                                     double arm, double line, double gamma_v,
                                                     double gamma_h,
                                                     const std::optional<EquilibriumPoint>& hint) {
  const auto geo = geometry(arm, line, gamma_v, gamma_h);
  if (!(gamma_h > geo.psi)) return std::nullopt;
  if (hint) {
    const auto n = newton(env, ac, arm, line, gamma_v, gamma_h, hint->zeta, hint->omega);
    if (n.converged && n.omega > 0.0) {
      return assemble(env, ac, arm, line, gamma_v, {n.zeta, n.omega, gamma_h}, n.residual);
    }
  }
  const double omega_ref =
      std::sqrt(2.0 * ac.wing_loading() * env.g / (env.rho * ac.lift_coeff())) / geo.r_prime;

  // Primary starts first; the wider roll offsets only run if those fail.
  static constexpr std::array<double, 2> kPrimaryRoll{0.1, -0.1};
  static constexpr std::array<double, 4> kFallbackRoll{0.5, 0.9, 1.3, -0.5};
  static constexpr std::array<double, 3> kOmegaScale{1.0, 0.7, 1.4};

  auto attempt = [&](double roll) -> std::optional<RotationalEquilibrium> {
    for (double s : kOmegaScale) {
      const auto n = newton(env, ac, arm, line, gamma_v, gamma_h, gamma_v + roll, s * omega_ref);
      if (n.converged && n.omega > 0.0) {
        return assemble(env, ac, arm, line, gamma_v, {n.zeta, n.omega, gamma_h}, n.residual);
      }
    }
    return std::nullopt;
  };
  for (double roll : kPrimaryRoll) {
    if (auto e = attempt(roll)) return e;
  }
  for (double roll : kFallbackRoll) {
    if (auto e = attempt(roll)) return e;
  }
  return std::nullopt;
}

}  // namespace

std::optional<RotationalEquilibrium> solve_equilibrium(const Environment& env, const Aircraft& ac,
                                                       double arm, double line, double gamma_v,
                                                       double gamma_h) {
  return solve_with_hint(env, ac, arm, line, gamma_v, gamma_h, std::nullopt);
}

std::optional<RotationalEquilibrium> min_power_at(const Environment& env, const Aircraft& ac,
                                                  const RotationalConfig& cfg, double arm,
                                                  double line, double gamma_v) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  const double lo = 0.0;
  const double hi = kPi / 2.0;
  const int n = cfg.gamma_h_grid;

  std::optional<EquilibriumPoint> hint;
  auto evaluate = [&](double gh) -> std::optional<RotationalEquilibrium> {
    auto e = solve_with_hint(env, ac, arm, line, gamma_v, gh, hint);
    if (e) hint = EquilibriumPoint{e->zeta, e->omega, gh};
    if (e && admissible(cfg, *e)) return e;
    return std::nullopt;
  };

  // Coarse scan on the open interval (0, pi/2).
  std::optional<RotationalEquilibrium> best;
  int best_index = -1;
  const double h = (hi - lo) / (n + 1);
  for (int i = 1; i <= n; ++i) {
    const double gh = lo + h * i;
    auto e = evaluate(gh);
    if (e && (!best || e->power < best->power)) {
      best = e;
      best_index = i;
    }
  }
  if (!best) return std::nullopt;

  // Golden-section refinement inside the neighbouring cells; infeasible is +inf.
  auto cost = [&](double gh, std::optional<RotationalEquilibrium>& slot) {
    slot = evaluate(gh);
    return slot ? slot->power : kInf;
  };
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo + h * (best_index - 1);
  double b = lo + h * (best_index + 1);
  std::optional<RotationalEquilibrium> sc, sd;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = cost(c, sc);
  double fd = cost(d, sd);
  while (b - a > 1e-7) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      sd = sc;
      c = b - inv_phi * (b - a);
      fc = cost(c, sc);
    } else {
      a = c;
      c = d;
      fc = fd;
      sc = sd;
      d = a + inv_phi * (b - a);
      fd = cost(d, sd);
    }
  }
  if (sc && sc->power < best->power) best = sc;
  if (sd && sd->power < best->power) best = sd;
  return best;
}

std::vector<double> line_grid(const RotationalConfig& cfg) {
  return linspace(0.0, cfg.line_max, cfg.line_grid);
}

std::vector<double> gamma_v_grid(const RotationalConfig& cfg) {
  return linspace(cfg.gamma_v_min(), cfg.gamma_v_max, cfg.gamma_v_grid);
}

std::vector<double> arm_grid(const RotationalConfig& cfg) {
  return linspace(cfg.arm_min, cfg.arm_max, cfg.arm_grid);
}

std::optional<PeakPowerProfile> peak_power_profile(const Environment& env, const Aircraft& ac,
                                                   const RotationalConfig& cfg, double arm) {
  const auto lines = line_grid(cfg);
  std::optional<PeakPowerProfile> best;
  for (double gv : gamma_v_grid(cfg)) {
    PeakPowerProfile candidate;
    candidate.arm_length = arm;
    candidate.gamma_v = gv;
    candidate.power = -1.0;
    bool feasible = true;
    for (double l : lines) {
      const auto e = min_power_at(env, ac, cfg, arm, l, gv);
      if (!e) {
        feasible = false;
        break;
      }
      candidate.max_omega = std::max(candidate.max_omega, e->omega);
      if (e->power > candidate.power) {
        candidate.power = e->power;
        candidate.critical = *e;
      }
      // The inner max only grows, so this inclination cannot beat the incumbent.
      if (best && candidate.power >= best->power) {
        feasible = false;
        break;
      }
    }
    if (feasible && (!best || candidate.power < best->power)) {
      candidate.max_tip_speed = candidate.max_omega * arm;
      best = candidate;
    }
  }
  return best;
}

ArmOptimum optimal_arm(const Environment& env, const Aircraft& ac, const RotationalConfig& cfg) {
  env.validate();
  cfg.validate();
  const auto arms = arm_grid(cfg);
  ArmOptimum out;
  out.per_arm = parallel_map(arms.size(), [&](std::size_t i) {
    return peak_power_profile(env, ac, cfg, arms[i]);
  });
  const PeakPowerProfile* best = nullptr;
  for (const auto& p : out.per_arm) {
    if (p && (!best || p->power < best->power)) best = &*p;
  }
  if (!best) {
    // Name the constraint that binds at the most favourable corner.
    const double gv = cfg.gamma_v_min();
    const auto corner = solve_equilibrium(env, ac, cfg.arm_max, 0.0, gv, kPi / 4.0);
    std::string binding = corner ? "roll constraint |zeta - gamma_V| <= zeta_max"
                                 : "force equilibrium (no steady state)";
    throw InfeasibleError("rotational take-off infeasible for every arm length in [" +
                              std::to_string(cfg.arm_min) + ", " + std::to_string(cfg.arm_max) +
                              "] m at gamma_V >= " + std::to_string(rad_to_deg(gv)) + " deg",
                          binding);
  }
  out.arm_length = best->arm_length;
  out.power = best->power;
  out.ground_area = kPi * best->arm_length * best->arm_length;
  out.profile = *best;
  return out;
}

std::vector<MaxGammaPoint> max_gamma_curve(const Environment& env, const Aircraft& ac,
                                           const RotationalConfig& cfg, double arm,
                                           const std::vector<double>& lines) {
  const double resolution = deg_to_rad(0.1);
  return parallel_map(lines.size(), [&](std::size_t i) {
    const double l = lines[i];
    auto feasible = [&](double gv) { return min_power_at(env, ac, cfg, arm, l, gv).has_value(); };
    MaxGammaPoint pt{l, std::nullopt};
    // Feasibility need not be monotone at small inclinations, so walk down
    // from the top in coarse steps before bisecting.
    const double coarse = deg_to_rad(2.0);
    double hi = cfg.gamma_v_max;
    if (feasible(hi)) {
      pt.gamma_v_max = hi;
      return pt;
    }
    double lo = hi - coarse;
    while (lo > 0.0 && !feasible(lo)) {
      hi = lo;
      lo -= coarse;
    }
    if (lo <= 0.0) return pt;
    while (hi - lo > resolution) {
      const double mid = 0.5 * (lo + hi);
      (feasible(mid) ? lo : hi) = mid;
    }
    pt.gamma_v_max = lo;
    return pt;
  });
}

SweepRow to_row(double arm, double line, double gamma_v,
                const std::optional<RotationalEquilibrium>& eq) {
  SweepRow row;
  row.arm_length = arm;
  row.line_length = line;
  row.gamma_v = gamma_v;
  if (eq) {
    row.gamma_h = eq->gamma_h;
    row.zeta = eq->zeta;
    row.omega = eq->omega;
    row.power = eq->power;
    row.feasible = true;
  } else {
    row.gamma_h = row.zeta = row.omega = row.power = std::numeric_limits<double>::quiet_NaN();
  }
  return row;
}

std::vector<SweepRow> power_vs_arm(const Environment& env, const Aircraft& ac,
                                   const RotationalConfig& cfg, double line, double gamma_v,
                                   const std::vector<double>& arms) {
  return parallel_map(arms.size(), [&](std::size_t i) {
    return to_row(arms[i], line, gamma_v, min_power_at(env, ac, cfg, arms[i], line, gamma_v));
  });
}

std::vector<SweepRow> power_vs_gamma(const Environment& env, const Aircraft& ac,
                                     const RotationalConfig& cfg, double arm, double line,
                                     const std::vector<double>& gammas) {
  return parallel_map(gammas.size(), [&](std::size_t i) {
    return to_row(arm, line, gammas[i], min_power_at(env, ac, cfg, arm, line, gammas[i]));
  });
}

std::optional<double> min_feasible_arm(const Environment& env, const Aircraft& ac,
                                       const RotationalConfig& cfg, double gamma_v, double lo,
                                       double hi, double resolution) {
  const auto lines = line_grid(cfg);
  auto reachable = [&](double arm) {
    for (double l : lines) {
      if (!min_power_at(env, ac, cfg, arm, l, gamma_v)) return false;
    }
    return true;
  };
  if (!reachable(hi)) return std::nullopt;
  if (reachable(lo)) return lo;
  while (hi - lo > resolution) {
    const double mid = 0.5 * (lo + hi);
    (reachable(mid) ? hi : lo) = mid;
  }
  return hi;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "R_m,l_m,gammaV_deg,gammaH_deg,zeta_deg,omega_rad_s,power_W,feasible\n";
  const auto old = os.precision(17);
  for (const auto& r : rows) {
    os << r.arm_length << ',' << r.line_length << ',' << rad_to_deg(r.gamma_v) << ','
       << rad_to_deg(r.gamma_h) << ',' << rad_to_deg(r.zeta) << ',' << r.omega << ',' << r.power
       << ',' << (r.feasible ? 1 : 0) << '\n';
  }
  os.precision(old);
}

}  // namespace rotational
}  // namespace awe
