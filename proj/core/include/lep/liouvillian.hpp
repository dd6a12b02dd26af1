#pragma once

#include <Eigen/Dense>

#include <array>
#include <utility>
#include <vector>

#include "lep/model_core.hpp"

namespace lep {

// 4x4 generator acting on the density vector (rho00, rho11, rho10, rho01).
using LiouvillianMatrix = Eigen::Matrix4cd;

struct DensityVector {
  Complex rho00{0.0, 0.0};
  Complex rho11{0.0, 0.0};
  Complex rho10{0.0, 0.0};
  Complex rho01{0.0, 0.0};

  Eigen::Vector4cd vector() const;
  static DensityVector from_vector(const Eigen::Vector4cd& v);
  Complex trace() const { return rho00 + rho11; }
};

// Unit trace, Hermitian structure and positivity, all within tol.
bool is_physical(const DensityVector& rho, double tol = 1e-10);

enum class SpectrumMethod { Analytic, Numeric };

// Full spectral data of the generator. lambdas holds the steady (zero) mode
// last and the three nontrivial eigenvalues sorted by (Re desc, Im desc).
// eigenvectors, when present, are aligned with lambdas. coalescence lists
// index pairs whose eigenvalues (and eigenvectors, when available) have
// merged within tolerance.
struct LiouvillianSpectrum {
  std::array<Complex, 4> lambdas{};
  std::vector<Eigen::Vector4cd> eigenvectors;
  std::vector<std::pair<int, int>> coalescence;
  SpectrumMethod method = SpectrumMethod::Analytic;
};

LiouvillianMatrix build_liouvillian(const AtomParams& p);

// Closed-form steady state,
//   rho11 = omega^2 / (2 omega^2 + delta^2 + (gamma/2)^2), etc.
DensityVector steady_state(const AtomParams& p);

// Trace-normalized null vector of the generator via the dense eigensolver;
// the independent cross-check for the closed form.
DensityVector steady_state_numeric(const LiouvillianMatrix& m);

// Coefficients (a2, a1, a0) of the nontrivial cubic factor of the
// characteristic polynomial lambda (lambda^3 + a2 lambda^2 + a1 lambda + a0).
std::array<double, 3> characteristic_coefficients(const AtomParams& p);

// Closed-form spectrum from the cubic solver. Coalescence here is flagged
// on eigenvalue distance alone; no eigenvectors are attached off resonance.
LiouvillianSpectrum eigenvalues_analytic(const AtomParams& p,
                                         double coalesce_tol = tol::coalesce);

// Dense-eigensolver spectrum, the oracle for the closed forms. Coalescence
// requires both the eigenvalue gap below coalesce_tol * gamma and the
// eigenvector overlap above 1 - coalesce_tol, which separates exceptional
// points from diabolic crossings.
LiouvillianSpectrum eigenvalues_numeric(const LiouvillianMatrix& m,
                                        double coalesce_tol = tol::coalesce);

// Resonant closed-form eigenvectors, unnormalized as displayed, with the
// steady state attached as the zero-mode eigenvector.
LiouvillianSpectrum resonant_eigenvectors(const AtomParams& p,
                                          double coalesce_tol = tol::coalesce);

// Rank of (m - lambda I) counted from singular values above
// threshold * ||m||_2. Rank 3 at a double eigenvalue certifies a defective
// (Jordan-block) point.
int rank_at(const LiouvillianMatrix& m, Complex lambda, double threshold = tol::rank_svd);

}  // namespace lep
