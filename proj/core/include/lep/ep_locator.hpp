#pragma once

#include <span>
#include <vector>

#include "lep/model_core.hpp"

namespace lep {

struct EPQuery {
  double delta = 0.0;
  double gamma = 1.0;
};

struct SexticCoefficients {
  double b2 = 0.0;
  double b1 = 0.0;
  double b0 = 0.0;
};

// Exceptional points of the generator at fixed detuning: the drive
// amplitudes (0, 1 or 2 of them, ascending) at which the coherence pair of
// eigenvalues and eigenvectors coalesces.
struct EPResult {
  double delta = 0.0;
  std::vector<double> omegas;
  double critical_delta = 0.0;
  // Resolvent discriminant of the bi-cubic: negative where two exceptional
  // points exist, positive where none do, zero at the critical detuning.
  // Sign diagnostic only; the magnitude carries no calibrated meaning.
  double discriminant = 0.0;
};

// Largest detuning that still admits an exceptional point: gamma / (6 sqrt(3)).
double critical_detuning(double gamma);

// Coefficients of the degeneracy condition
//   omega^6 + b2 omega^4 + b1 omega^2 + b0 = 0.
SexticCoefficients sextic_coefficients(const EPQuery& q);

// Residual of the degeneracy sextic at a candidate drive amplitude.
double sextic_residual(const EPQuery& q, double omega);

// Solves the sextic as a cubic in omega^2, filters the trivial zero-drive
// cluster and any root whose numeric spectrum lacks genuine eigenvector
// coalescence, and polishes survivors with one Newton step.
EPResult solve_ep_sextic(const EPQuery& q);

// Maps solve_ep_sextic over a detuning grid. Grid order is preserved in the
// output no matter how many workers evaluate it.
std::vector<EPResult> ep_sweep(double gamma, std::span<const double> delta_grid,
                               unsigned jobs = 1);

}  // namespace lep
