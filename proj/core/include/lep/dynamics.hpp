#pragma once

#include <Eigen/Dense>

#include <optional>
#include <span>
#include <vector>

#include "lep/model_core.hpp"

namespace lep {

// Single-time means (<sigma>, <sigma^dag>, <sigma^dag sigma>).
struct MomentVector {
  Complex sigma_mean{0.0, 0.0};
  Complex sigma_dag_mean{0.0, 0.0};
  Complex population{0.0, 0.0};

  Eigen::Vector3cd vector() const;
  static MomentVector from_vector(const Eigen::Vector3cd& v);
};

// The moment equations  i d/dt Psi = H Psi + P.
struct DynamicalMatrix3 {
  Eigen::Matrix3cd matrix;
  Eigen::Vector3cd drive;
};

enum class TraceMethod { AnalyticPiecewise, NumericODE };

// A correlator or population sampled against time or delay. Values are
// stored as complex throughout; population and g2 traces carry vanishing
// imaginary parts, and the analytic g1 branches store the printed |g1|.
struct CorrelatorTrace {
  std::vector<double> taus;
  std::vector<Complex> values;
  std::optional<DrivingRegime> regime;  // set on resonance only
  TraceMethod method = TraceMethod::NumericODE;

  std::vector<double> real_values() const;
};

// Steady-state population split into the coherent mean-field part
// <sigma^dag><sigma> and the incoherent quantum remainder <v^dag v>.
struct PopulationSplit {
  double classical = 0.0;
  double quantum = 0.0;
};

DynamicalMatrix3 build_moment_system(const AtomParams& p);

// Trajectory of the moment equations from `initial` at t = 0, sampled on
// t_grid (strictly ascending, nonnegative).
std::vector<MomentVector> integrate_moments(const AtomParams& p, const MomentVector& initial,
                                            std::span<const double> t_grid);

// Population component of integrate_moments, reported as a real trace.
CorrelatorTrace evolve_moments(const AtomParams& p, const MomentVector& initial,
                               std::span<const double> t_grid);

// Piecewise closed-form population on resonance with initial population 1:
// trigonometric above the exceptional point, linear-in-t at it, hyperbolic
// below it.
CorrelatorTrace population_analytic(const AtomParams& p, std::span<const double> t_grid);

PopulationSplit population_split(const AtomParams& p);

// First-order coherence. The analytic method evaluates the printed |g1|
// branches (resonance only); the numeric method integrates the regression
// system from the steady state and returns complex g1.
CorrelatorTrace g1(const AtomParams& p, std::span<const double> tau_grid, TraceMethod method);

// Second-order coherence; same split of methods as g1.
CorrelatorTrace g2(const AtomParams& p, std::span<const double> tau_grid, TraceMethod method);

// Regression trajectory  i d/dtau v = H v + drive_scale * P  from v0.
// g1, g2 and the emission spectrum all run on this engine with different
// initial data and drive constants.
std::vector<Eigen::Vector3cd> integrate_regression(const DynamicalMatrix3& sys,
                                                   Complex drive_scale,
                                                   const Eigen::Vector3cd& v0,
                                                   std::span<const double> tau_grid);

// tau = 0 followed by `points` log-spaced delays on [lo, hi] / gamma.
std::vector<double> default_tau_grid(double gamma, std::size_t points = 400,
                                     double lo = 1e-3, double hi = 20.0);

}  // namespace lep
