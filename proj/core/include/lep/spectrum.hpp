#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lep/liouvillian.hpp"
#include "lep/model_core.hpp"

namespace lep {

// Emission spectrum sampled on a grid of offsets from the elastic line
// (omega - omega_0 on resonance), in units of gamma. The elastic Rayleigh
// delta peak is reported as a separate scalar weight and is never folded
// onto the sampled lineshape.
struct SpectrumResult {
  double elastic_weight = 0.0;
  std::vector<double> omega_grid;
  std::vector<double> inelastic;
  std::optional<DrivingRegime> regime;
  SpectrumMethod method = SpectrumMethod::Analytic;
};

// Weight of the elastic delta peak, (gamma/2)^2 / ((gamma/2)^2 + 2 omega^2).
double elastic_weight(const AtomParams& p);

// Piecewise closed-form lineshape on resonance: central Lorentzian plus
// Mollow sidebands above the exceptional point, the degenerate squared-
// Lorentzian singlet at it, a pair of centered Lorentzians below it.
SpectrumResult spectrum_analytic(const AtomParams& p, std::span<const double> omega_grid);

struct NumericSpectrumOptions {
  double tau_max = 40.0;   // correlator truncation, units of 1/gamma
  double dtau = 1e-3;      // trapezoid spacing, units of 1/gamma
  double tail_tol = 1e-8;  // |C(tau_max) - C(inf)| must fall below this * C(0)
};

// Fourier-transform oracle: integrates the two-time correlator with the
// regression engine, splits off the long-delay constant as the elastic
// weight, and transforms the remainder by trapezoid quadrature. Works for
// any detuning; offsets are then measured from the drive frequency.
SpectrumResult spectrum_numeric(const AtomParams& p, std::span<const double> omega_grid,
                                const NumericSpectrumOptions& opt = {});

// Pieces of the analytic lineshape, exposed for the quadrature checks.
double central_lorentzian(double gamma, double x);

// Mollow sideband S_+ (side = +1) or S_- (side = -1): a Lorentzian at
// +-mollow_frequency plus a dispersive interference term.
double mollow_sideband(const AtomParams& p, int side, double x);

struct BelowEPWeights {
  double l_plus = 0.0;
  double l_minus = 0.0;
};

// Weights of the two centered Lorentzians below the exceptional point.
// The printed l_plus carries a (2 Gamma - gamma/2) denominator factor that
// cancels analytically; it is evaluated here in a rearranged exact form
// with the factor multiplied out, which stays finite all the way to
// omega = 0.
BelowEPWeights below_ep_weights(const AtomParams& p);

}  // namespace lep
