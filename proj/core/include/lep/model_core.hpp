#pragma once

#include <complex>
#include <stdexcept>

// Driven, dissipative two-level atom: shared domain types, parameter
// validation and regime classification. All frequencies and rates are
// measured in units of the decay rate gamma unless stated otherwise.

namespace lep {

using Complex = std::complex<double>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parameters or configuration rejected before any computation ran.
struct InvalidParams : Error {
  using Error::Error;
};

// The requested operation has a closed form only on resonance (delta = 0).
struct NonResonantInput : Error {
  using Error::Error;
};

// The adaptive integrator could not satisfy the requested tolerances.
struct ToleranceNotMet : Error {
  using Error::Error;
};

// A correlator had not settled to its long-delay constant at the
// truncation time.
struct TailNotConverged : Error {
  using Error::Error;
};

// Dense eigensolver failure; not expected for 4x4 problems at sane scales.
struct ConvergenceFailure : Error {
  using Error::Error;
};

namespace tol {

// Regime classification against the exact branch point, in units of gamma.
inline constexpr double ep_classify = 1e-9;

// Numeric eigenvalue/eigenvector coalescence detection. Looser than the
// analytic tolerance: eigenvalue splitting near an exceptional point
// scales as the square root of the parameter perturbation.
inline constexpr double coalesce = 1e-6;

// Defectiveness rank test, relative to the largest singular value.
inline constexpr double rank_svd = 1e-8;

// Moment-equation integrator tolerances.
inline constexpr double ode_rel = 1e-10;
inline constexpr double ode_abs = 1e-12;

}  // namespace tol

// The four physical knobs. gamma > 0 sets the scale; omega >= 0 (a negative
// amplitude is absorbed into the phase); theta is canonicalized to
// [0, 2*pi). Construction validates, so every instance is usable as-is.
struct AtomParams {
  double delta = 0.0;  // laser-atom detuning
  double omega = 0.0;  // drive amplitude
  double gamma = 1.0;  // decay rate
  double theta = 0.0;  // drive phase

  AtomParams(double delta, double omega, double gamma = 1.0, double theta = 0.0);
};

enum class RegimeTag { BelowEP, AtEP, AboveEP };

struct DrivingRegime {
  RegimeTag tag = RegimeTag::BelowEP;
  double distance = 0.0;  // (omega - omega_ep) / gamma
};

// Resonant exceptional-point drive amplitude, gamma / 8.
double ep_drive(double gamma);

// Classify the drive against the resonant exceptional point. Only defined
// on resonance; off-resonant EP location is the locator module's job.
DrivingRegime classify_regime(const AtomParams& p, double ep_tol = tol::ep_classify);

// Oscillatory splitting of the coherence eigenvalue pair,
// sqrt((2 omega)^2 - (gamma/4)^2). Real above the exceptional point,
// purely imaginary (i * hyperbolic_rate) below it, zero at it.
Complex mollow_frequency(const AtomParams& p);

// Hyperbolic companion sqrt((gamma/4)^2 - (2 omega)^2), governing the
// non-oscillatory relaxation below the exceptional point. Zero at and
// above it.
double hyperbolic_rate(const AtomParams& p);

}  // namespace lep
