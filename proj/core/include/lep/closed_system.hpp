#pragma once

#include <Eigen/Dense>

#include "lep/model_core.hpp"

namespace lep {

using HermitianMatrix2 = Eigen::Matrix2cd;

// Dressed-state data of the lossless model: energies omega_pm = delta/2 +- nu
// and the mixing angle phi. At omega = delta = 0 the two levels are
// degenerate, nu = 0 and phi is undefined; phi_defined flags that case
// instead of letting a division by zero propagate NaN.
struct DressedStates {
  double omega_plus = 0.0;
  double omega_minus = 0.0;
  double nu = 0.0;
  double sin_phi = 0.0;
  double cos_phi = 0.0;
  bool phi_defined = false;
};

// Rotating-frame Hamiltonian in the {|0>, |1>} basis:
//   [[0, omega e^{-i theta}], [omega e^{i theta}, delta]].
HermitianMatrix2 build_closed_hamiltonian(const AtomParams& p);

DressedStates dressed_states(const AtomParams& p);

// Columns |+> and |-> reconstructed from the mixing angle. Unitary whenever
// phi is defined.
Eigen::Matrix2cd dressed_basis(const DressedStates& d, double theta);

}  // namespace lep
