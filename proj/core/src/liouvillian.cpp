#include "lep/liouvillian.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "lep/cubic.hpp"

namespace lep {

namespace {

constexpr Complex kI{0.0, 1.0};

struct Mode {
  Complex lambda{0.0, 0.0};
  Eigen::Vector4cd vec = Eigen::Vector4cd::Zero();
  bool has_vec = false;
};

// Sorts the nontrivial triple by (Re desc, Im desc), appends the steady
// mode, and flags coalesced pairs. Real parts that agree within the tie
// band (rounding noise of an exact conjugate pair) are ordered by Im so
// analytic and numeric spectra line up column-wise.
LiouvillianSpectrum assemble(std::vector<Mode> modes, Mode steady, SpectrumMethod method,
                             double scale, double gap_tol, double overlap_tol) {
  std::sort(modes.begin(), modes.end(), [](const Mode& a, const Mode& b) {
    if (a.lambda.real() != b.lambda.real()) return a.lambda.real() > b.lambda.real();
    return a.lambda.imag() > b.lambda.imag();
  });
  const double tie_band = 1e-12 * scale;
  for (std::size_t pass = 0; pass + 1 < modes.size(); ++pass) {
    for (std::size_t j = 0; j + 1 < modes.size(); ++j) {
      if (std::abs(modes[j].lambda.real() - modes[j + 1].lambda.real()) <= tie_band &&
          modes[j].lambda.imag() < modes[j + 1].lambda.imag()) {
        std::swap(modes[j], modes[j + 1]);
      }
    }
  }
  modes.push_back(std::move(steady));

  LiouvillianSpectrum out;
  out.method = method;
  const bool with_vecs =
      std::all_of(modes.begin(), modes.end(), [](const Mode& m) { return m.has_vec; });
  for (int i = 0; i < 4; ++i) {
    out.lambdas[i] = modes[i].lambda;
    if (with_vecs) out.eigenvectors.push_back(modes[i].vec);
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (std::abs(out.lambdas[i] - out.lambdas[j]) > gap_tol) continue;
      if (with_vecs) {
        const auto& vi = out.eigenvectors[i];
        const auto& vj = out.eigenvectors[j];
        const double overlap = std::abs(vi.dot(vj)) / (vi.norm() * vj.norm());
        if (overlap <= 1.0 - overlap_tol) continue;
      }
      out.coalescence.emplace_back(i, j);
    }
  }
  return out;
}

}  // namespace

Eigen::Vector4cd DensityVector::vector() const {
  Eigen::Vector4cd v;
  v << rho00, rho11, rho10, rho01;
  return v;
}

DensityVector DensityVector::from_vector(const Eigen::Vector4cd& v) {
  return {v[0], v[1], v[2], v[3]};
}

bool is_physical(const DensityVector& rho, double tol) {
  if (std::abs(rho.trace() - 1.0) > tol) return false;
  if (std::abs(rho.rho01 - std::conj(rho.rho10)) > tol) return false;
  if (std::abs(rho.rho00.imag()) > tol || std::abs(rho.rho11.imag()) > tol) return false;
  const double p0 = rho.rho00.real();
  const double p1 = rho.rho11.real();
  if (p0 < -tol || p0 > 1.0 + tol || p1 < -tol || p1 > 1.0 + tol) return false;
  // det(rho) >= 0 within tol: positivity of the 2x2 density matrix.
  return p0 * p1 - std::norm(rho.rho10) >= -tol;
}

LiouvillianMatrix build_liouvillian(const AtomParams& p) {
  const Complex d = p.omega * std::exp(kI * p.theta);  // Omega e^{i theta}
  const Complex dc = std::conj(d);
  const double g = p.gamma;
  LiouvillianMatrix m;
  m << Complex(0.0), Complex(g), -kI * dc, kI * d,                      //
      Complex(0.0), Complex(-g), kI * dc, -kI * d,                      //
      -kI * d, kI * d, Complex(-0.5 * g, -p.delta), Complex(0.0),       //
      kI * dc, -kI * dc, Complex(0.0), Complex(-0.5 * g, p.delta);
  return m;
}

DensityVector steady_state(const AtomParams& p) {
  const double half_g = 0.5 * p.gamma;
  const double denom = 2.0 * p.omega * p.omega + p.delta * p.delta + half_g * half_g;
  const double rho11 = p.omega * p.omega / denom;
  const Complex rho10 = -p.omega * std::exp(kI * p.theta) * Complex(p.delta, half_g) / denom;
  DensityVector rho;
  rho.rho00 = 1.0 - rho11;
  rho.rho11 = rho11;
  rho.rho10 = rho10;
  rho.rho01 = std::conj(rho10);
  return rho;
}

DensityVector steady_state_numeric(const LiouvillianMatrix& m) {
  Eigen::ComplexEigenSolver<LiouvillianMatrix> solver(m);
  if (solver.info() != Eigen::Success)
    throw ConvergenceFailure("4x4 eigendecomposition did not converge");
  int best = 0;
  for (int i = 1; i < 4; ++i) {
    if (std::abs(solver.eigenvalues()[i]) < std::abs(solver.eigenvalues()[best])) best = i;
  }
  const Eigen::Vector4cd v = solver.eigenvectors().col(best);
  const Complex trace = v[0] + v[1];
  if (std::abs(trace) < 1e-12 * v.norm())
    throw ConvergenceFailure("null vector has vanishing trace");
  return DensityVector::from_vector(v / trace);
}

std::array<double, 3> characteristic_coefficients(const AtomParams& p) {
  const double g = p.gamma;
  const double d2 = p.delta * p.delta;
  const double o2 = p.omega * p.omega;
  return {2.0 * g, d2 + 4.0 * o2 + 1.25 * g * g, g * (d2 + 2.0 * o2 + 0.25 * g * g)};
}

LiouvillianSpectrum eigenvalues_analytic(const AtomParams& p, double coalesce_tol) {
  const auto [a2, a1, a0] = characteristic_coefficients(p);
  const CubicRoots cubic = solve_cubic(a2, a1, a0);
  std::vector<Mode> modes(3);
  for (int i = 0; i < 3; ++i) modes[i].lambda = cubic.roots[i];
  return assemble(std::move(modes), Mode{}, SpectrumMethod::Analytic, p.gamma,
                  coalesce_tol * p.gamma, coalesce_tol);
}

LiouvillianSpectrum eigenvalues_numeric(const LiouvillianMatrix& m, double coalesce_tol) {
  Eigen::ComplexEigenSolver<LiouvillianMatrix> solver(m);
  if (solver.info() != Eigen::Success)
    throw ConvergenceFailure("4x4 eigendecomposition did not converge");

  // The trace is exactly -2 gamma for this generator family; fall back to
  // the matrix norm for generic input.
  double scale = -0.5 * m.trace().real();
  if (!(scale > 0.0)) scale = 0.25 * m.norm();

  int steady_idx = 0;
  for (int i = 1; i < 4; ++i) {
    if (std::abs(solver.eigenvalues()[i]) < std::abs(solver.eigenvalues()[steady_idx]))
      steady_idx = i;
  }

  std::vector<Mode> modes;
  Mode steady;
  for (int i = 0; i < 4; ++i) {
    Mode mode{solver.eigenvalues()[i], solver.eigenvectors().col(i), true};
    if (i == steady_idx) {
      steady = std::move(mode);
    } else {
      modes.push_back(std::move(mode));
    }
  }
  return assemble(std::move(modes), std::move(steady), SpectrumMethod::Numeric, scale,
                  coalesce_tol * scale, coalesce_tol);
}

LiouvillianSpectrum resonant_eigenvectors(const AtomParams& p, double coalesce_tol) {
  if (p.delta != 0.0) throw NonResonantInput("resonant_eigenvectors requires delta = 0");
  const double g = p.gamma;
  const Complex ot = mollow_frequency(p);
  const Complex phase = std::exp(kI * p.theta);
  const Complex phase_c = std::conj(phase);

  std::vector<Mode> modes(3);
  modes[0].lambda = -0.5 * g;
  modes[0].vec << 0.0, 0.0, phase, phase_c;
  modes[0].has_vec = true;

  modes[1].lambda = -0.75 * g + kI * ot;
  modes[2].lambda = -0.75 * g - kI * ot;
  if (p.omega == 0.0) {
    // The displayed coherence-pair forms are 0/0 at zero drive; the
    // population-sector limit direction takes over.
    modes[1].vec << -1.0, 1.0, 0.0, 0.0;
    modes[2].vec << 0.0, 0.0, phase, -phase_c;
  } else {
    const Complex c2 = 8.0 * kI * p.omega / (g + 4.0 * kI * ot);
    const Complex c3 = 8.0 * kI * p.omega / (g - 4.0 * kI * ot);
    modes[1].vec << -c2, c2, phase, -phase_c;
    modes[2].vec << -c3, c3, phase, -phase_c;
  }
  modes[1].has_vec = true;
  modes[2].has_vec = true;

  Mode steady;
  steady.vec = steady_state(p).vector();
  steady.has_vec = true;
  return assemble(std::move(modes), std::move(steady), SpectrumMethod::Analytic, g,
                  coalesce_tol * g, coalesce_tol);
}

int rank_at(const LiouvillianMatrix& m, Complex lambda, double threshold) {
  const LiouvillianMatrix shifted = m - lambda * LiouvillianMatrix::Identity();
  const Eigen::JacobiSVD<LiouvillianMatrix> svd_shifted(shifted);
  const Eigen::JacobiSVD<LiouvillianMatrix> svd_m(m);
  const double cut = threshold * svd_m.singularValues()[0];
  int rank = 0;
  for (int i = 0; i < 4; ++i) {
    if (svd_shifted.singularValues()[i] > cut) ++rank;
  }
  return rank;
}

}  // namespace lep
