#include "lep/closed_system.hpp"

#include <algorithm>
#include <cmath>

namespace lep {

HermitianMatrix2 build_closed_hamiltonian(const AtomParams& p) {
  const Complex drive = p.omega * std::exp(Complex(0.0, p.theta));
  HermitianMatrix2 h;
  h << 0.0, std::conj(drive),  //
      drive, p.delta;
  return h;
}

DressedStates dressed_states(const AtomParams& p) {
  DressedStates d;
  d.nu = std::hypot(p.omega, 0.5 * p.delta);
  if (d.nu == 0.0) return d;  // omega = delta = 0: degenerate point

  d.omega_plus = 0.5 * p.delta + d.nu;
  d.omega_minus = 0.5 * p.delta - d.nu;
  // |delta / (2 nu)| <= 1 always; the clamp only eats rounding.
  const double ratio = std::clamp(0.5 * p.delta / d.nu, -1.0, 1.0);
  d.sin_phi = std::sqrt(0.5 * (1.0 - ratio));
  d.cos_phi = std::sqrt(0.5 * (1.0 + ratio));
  d.phi_defined = true;
  return d;
}

Eigen::Matrix2cd dressed_basis(const DressedStates& d, double theta) {
  const Complex phase = std::exp(Complex(0.0, -theta));
  Eigen::Matrix2cd basis;
  basis << phase * d.sin_phi, phase * d.cos_phi,  //
      d.cos_phi, -d.sin_phi;
  return basis;
}

}  // namespace lep
