#include "lep/dynamics.hpp"

#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "lep/liouvillian.hpp"

namespace lep {

namespace {

constexpr Complex kI{0.0, 1.0};

using State = std::array<Complex, 3>;

void validate_grid(std::span<const double> grid) {
  if (grid.empty()) throw InvalidParams("time grid must not be empty");
  if (!(grid.front() >= 0.0)) throw InvalidParams("time grid must start at t >= 0");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(grid[i])) throw InvalidParams("time grid must be finite");
    if (i > 0 && !(grid[i] > grid[i - 1]))
      throw InvalidParams("time grid must be strictly ascending");
  }
}

// Integrates d/dt v = -i (H v + inhom) from v0 at t = 0, sampled at `grid`.
std::vector<Eigen::Vector3cd> integrate_linear(const Eigen::Matrix3cd& h,
                                               const Eigen::Vector3cd& inhom,
                                               const Eigen::Vector3cd& v0,
                                               std::span<const double> grid) {
  namespace ode = boost::numeric::odeint;
  validate_grid(grid);

  const Eigen::Matrix3cd a = -kI * h;
  const Eigen::Vector3cd b = -kI * inhom;
  auto rhs = [&](const State& v, State& dvdt, double /*t*/) {
    const Eigen::Map<const Eigen::Vector3cd> vv(v.data());
    Eigen::Map<Eigen::Vector3cd> out(dvdt.data());
    out = a * vv + b;
  };

  std::vector<double> times;
  times.reserve(grid.size() + 1);
  const bool prepend_zero = grid.front() > 0.0;
  if (prepend_zero) times.push_back(0.0);
  times.insert(times.end(), grid.begin(), grid.end());

  State state{v0[0], v0[1], v0[2]};
  std::vector<Eigen::Vector3cd> samples;
  samples.reserve(times.size());
  auto observer = [&](const State& v, double /*t*/) {
    samples.emplace_back(Eigen::Map<const Eigen::Vector3cd>(v.data()));
  };

  const double dt0 = 0.05 / std::max(h.norm(), 1e-12);
  auto stepper = ode::make_controlled(tol::ode_abs, tol::ode_rel,
                                      ode::runge_kutta_fehlberg78<State>());
  try {
    ode::integrate_times(stepper, rhs, state, times.begin(), times.end(), dt0, observer,
                         ode::max_step_checker(2000000));
  } catch (const std::exception& e) {
    throw ToleranceNotMet(std::string("moment integrator: ") + e.what() +
                          " (rescale the problem so gamma is O(1))");
  }
  if (prepend_zero) samples.erase(samples.begin());
  return samples;
}

double square(double v) { return v * v; }

}  // namespace

Eigen::Vector3cd MomentVector::vector() const {
  Eigen::Vector3cd v;
  v << sigma_mean, sigma_dag_mean, population;
  return v;
}

MomentVector MomentVector::from_vector(const Eigen::Vector3cd& v) {
  return {v[0], v[1], v[2]};
}

std::vector<double> CorrelatorTrace::real_values() const {
  std::vector<double> out;
  out.reserve(values.size());
  for (const Complex& v : values) out.push_back(v.real());
  return out;
}

DynamicalMatrix3 build_moment_system(const AtomParams& p) {
  const Complex drive = p.omega * std::exp(kI * p.theta);  // Omega e^{i theta}
  const Complex drive_c = std::conj(drive);
  const double g = p.gamma;
  DynamicalMatrix3 sys;
  sys.matrix << Complex(p.delta, -0.5 * g), Complex(0.0), -2.0 * drive,  //
      Complex(0.0), Complex(-p.delta, -0.5 * g), 2.0 * drive_c,          //
      -drive_c, drive, Complex(0.0, -g);
  sys.drive << drive, -drive_c, Complex(0.0);
  return sys;
}

std::vector<MomentVector> integrate_moments(const AtomParams& p, const MomentVector& initial,
                                            std::span<const double> t_grid) {
  const DynamicalMatrix3 sys = build_moment_system(p);
  const auto traj = integrate_linear(sys.matrix, sys.drive, initial.vector(), t_grid);
  std::vector<MomentVector> out;
  out.reserve(traj.size());
  for (const auto& v : traj) out.push_back(MomentVector::from_vector(v));
  return out;
}

CorrelatorTrace evolve_moments(const AtomParams& p, const MomentVector& initial,
                               std::span<const double> t_grid) {
  const auto traj = integrate_moments(p, initial, t_grid);
  CorrelatorTrace trace;
  trace.taus.assign(t_grid.begin(), t_grid.end());
  trace.values.reserve(traj.size());
  for (const auto& m : traj) trace.values.emplace_back(m.population.real(), 0.0);
  if (p.delta == 0.0) trace.regime = classify_regime(p);
  trace.method = TraceMethod::NumericODE;
  return trace;
}

CorrelatorTrace population_analytic(const AtomParams& p, std::span<const double> t_grid) {
  if (p.delta != 0.0) throw NonResonantInput("population_analytic requires delta = 0");
  validate_grid(t_grid);
  const DrivingRegime regime = classify_regime(p);
  const double g = p.gamma;
  const double o2 = square(p.omega);
  const double half_g2 = square(0.5 * g);
  const double denom = 2.0 * o2 + half_g2;

  CorrelatorTrace trace;
  trace.taus.assign(t_grid.begin(), t_grid.end());
  trace.values.reserve(t_grid.size());
  trace.regime = regime;
  trace.method = TraceMethod::AnalyticPiecewise;

  for (double t : t_grid) {
    double n = 0.0;
    switch (regime.tag) {
      case RegimeTag::AtEP:
        n = 1.0 / 18.0 + (17.0 / 6.0 - 7.0 / 8.0 * g * t) * std::exp(-0.75 * g * t) / 3.0;
        break;
      case RegimeTag::AboveEP: {
        const double w = mollow_frequency(p).real();
        const double osc = (o2 + half_g2) * std::cos(w * t) -
                           g / (4.0 * w) * (5.0 * o2 + half_g2) * std::sin(w * t);
        n = (o2 + osc * std::exp(-0.75 * g * t)) / denom;
        break;
      }
      case RegimeTag::BelowEP: {
        // cosh/sinh recombined into plain exponentials so the damped
        // product cannot overflow at large t.
        const double r = hyperbolic_rate(p);
        const double ca = o2 + half_g2;
        const double cb = g / (4.0 * r) * (5.0 * o2 + half_g2);
        const double osc = 0.5 * (ca - cb) * std::exp((r - 0.75 * g) * t) +
                           0.5 * (ca + cb) * std::exp(-(r + 0.75 * g) * t);
        n = (o2 + osc) / denom;
        break;
      }
    }
    trace.values.emplace_back(n, 0.0);
  }
  return trace;
}

PopulationSplit population_split(const AtomParams& p) {
  const double half_g2 = square(0.5 * p.gamma);
  const double denom = 2.0 * square(p.omega) + square(p.delta) + half_g2;
  const double o2 = square(p.omega);
  return {o2 * (square(p.delta) + half_g2) / square(denom), 2.0 * o2 * o2 / square(denom)};
}

std::vector<Eigen::Vector3cd> integrate_regression(const DynamicalMatrix3& sys,
                                                   Complex drive_scale,
                                                   const Eigen::Vector3cd& v0,
                                                   std::span<const double> tau_grid) {
  return integrate_linear(sys.matrix, drive_scale * sys.drive, v0, tau_grid);
}

CorrelatorTrace g1(const AtomParams& p, std::span<const double> tau_grid, TraceMethod method) {
  CorrelatorTrace trace;
  trace.taus.assign(tau_grid.begin(), tau_grid.end());
  trace.values.reserve(tau_grid.size());
  trace.method = method;

  if (method == TraceMethod::AnalyticPiecewise) {
    if (p.delta != 0.0) throw NonResonantInput("analytic g1 requires delta = 0");
    validate_grid(tau_grid);
    const DrivingRegime regime = classify_regime(p);
    trace.regime = regime;
    const double g = p.gamma;
    const double o2 = square(p.omega);
    const double half_g2 = square(0.5 * g);
    const double denom = 2.0 * o2 + half_g2;
    const double steady = half_g2 / denom;

    for (double t : tau_grid) {
      double v = steady + 0.5 * std::exp(-0.5 * g * t);
      switch (regime.tag) {
        case RegimeTag::AtEP:
          v = 8.0 / 9.0 + 0.5 * std::exp(-0.5 * g * t) -
              (28.0 + 3.0 * g * t) / 72.0 * std::exp(-0.75 * g * t);
          break;
        case RegimeTag::AboveEP: {
          const double w = mollow_frequency(p).real();
          const double osc = (o2 - g * g / 8.0) * std::cos(w * t) +
                             g * (10.0 * o2 - half_g2) / (8.0 * w) * std::sin(w * t);
          v += osc * std::exp(-0.75 * g * t) / denom;
          break;
        }
        case RegimeTag::BelowEP: {
          const double r = hyperbolic_rate(p);
          const double ca = o2 - g * g / 8.0;
          const double cb = g * (10.0 * o2 - half_g2) / (8.0 * r);
          const double osc = 0.5 * (ca + cb) * std::exp((r - 0.75 * g) * t) +
                             0.5 * (ca - cb) * std::exp(-(r + 0.75 * g) * t);
          v += osc / denom;
          break;
        }
      }
      trace.values.emplace_back(v, 0.0);
    }
    return trace;
  }

  // Regression from the steady state. All squares of raising/lowering
  // operators vanish for a two-level atom, so psi(0) = (<sigma^dag sigma>, 0, 0)
  // and the inhomogeneous term is scaled by <sigma^dag>.
  const DensityVector ss = steady_state(p);
  const double norm = ss.rho11.real();
  if (!(norm > 0.0)) throw InvalidParams("numeric g1 requires omega > 0");
  Eigen::Vector3cd v0;
  v0 << ss.rho11, Complex(0.0), Complex(0.0);
  const auto traj = integrate_regression(build_moment_system(p), ss.rho01, v0, tau_grid);
  for (const auto& v : traj) trace.values.push_back(v[0] / norm);
  if (p.delta == 0.0) trace.regime = classify_regime(p);
  return trace;
}

CorrelatorTrace g2(const AtomParams& p, std::span<const double> tau_grid, TraceMethod method) {
  CorrelatorTrace trace;
  trace.taus.assign(tau_grid.begin(), tau_grid.end());
  trace.values.reserve(tau_grid.size());
  trace.method = method;

  if (method == TraceMethod::AnalyticPiecewise) {
    if (p.delta != 0.0) throw NonResonantInput("analytic g2 requires delta = 0");
    validate_grid(tau_grid);
    const DrivingRegime regime = classify_regime(p);
    trace.regime = regime;
    const double g = p.gamma;

    for (double t : tau_grid) {
      double v = 0.0;
      switch (regime.tag) {
        case RegimeTag::AtEP:
          v = 1.0 - (1.0 + 0.75 * g * t) * std::exp(-0.75 * g * t);
          break;
        case RegimeTag::AboveEP: {
          const double w = mollow_frequency(p).real();
          v = 1.0 - (std::cos(w * t) + 3.0 * g / (4.0 * w) * std::sin(w * t)) *
                        std::exp(-0.75 * g * t);
          break;
        }
        case RegimeTag::BelowEP: {
          const double r = hyperbolic_rate(p);
          const double cb = 3.0 * g / (4.0 * r);
          v = 1.0 - 0.5 * (1.0 + cb) * std::exp((r - 0.75 * g) * t) -
              0.5 * (1.0 - cb) * std::exp(-(r + 0.75 * g) * t);
          break;
        }
      }
      trace.values.emplace_back(v, 0.0);
    }
    return trace;
  }

  // Regression with Phi(0) = 0 (two consecutive emissions need a re-excitation)
  // and the inhomogeneous term scaled by the steady population.
  const DensityVector ss = steady_state(p);
  const double norm = ss.rho11.real();
  if (!(norm > 0.0)) throw InvalidParams("numeric g2 requires omega > 0");
  const auto traj = integrate_regression(build_moment_system(p), ss.rho11,
                                         Eigen::Vector3cd::Zero(), tau_grid);
  for (const auto& v : traj) trace.values.push_back(v[2] / (norm * norm));
  if (p.delta == 0.0) trace.regime = classify_regime(p);
  return trace;
}

std::vector<double> default_tau_grid(double gamma, std::size_t points, double lo, double hi) {
  if (!(gamma > 0.0)) throw InvalidParams("gamma must be positive");
  if (points < 2 || !(lo > 0.0) || !(hi > lo)) throw InvalidParams("bad tau grid request");
  std::vector<double> grid;
  grid.reserve(points + 1);
  grid.push_back(0.0);
  const double step = std::log(hi / lo) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    grid.push_back(lo * std::exp(step * static_cast<double>(i)) / gamma);
  }
  grid.back() = hi / gamma;  // exact endpoint
  return grid;
}

}  // namespace lep
