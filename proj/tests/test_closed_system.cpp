#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "support/test_support.hpp"

using namespace lep;

TEST_CASE("hamiltonian entries") {
  CHECK(build_closed_hamiltonian(AtomParams(0.0, 0.0, 1.0)).norm() == 0.0);

  const auto h = build_closed_hamiltonian(AtomParams(1.0, 0.5, 1.0, 0.0));
  CHECK(h(0, 0) == Complex(0.0, 0.0));
  CHECK(h(0, 1) == Complex(0.5, 0.0));
  CHECK(h(1, 0) == Complex(0.5, 0.0));
  CHECK(h(1, 1) == Complex(1.0, 0.0));
}

TEST_CASE("hamiltonian eigenvalues match the dressed energies") {
  // delta = 1, omega = 1/2: nu = sqrt(1/2), energies 1/2 +- nu
  const AtomParams p(1.0, 0.5, 1.0);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(build_closed_hamiltonian(p));
  CHECK(solver.eigenvalues()[0] == doctest::Approx(0.5 - std::sqrt(0.5)).epsilon(1e-14));
  CHECK(solver.eigenvalues()[1] == doctest::Approx(0.5 + std::sqrt(0.5)).epsilon(1e-14));
  CHECK(solver.eigenvalues()[1] == doctest::Approx(1.20710678118654752).epsilon(1e-14));
  CHECK(solver.eigenvalues()[0] == doctest::Approx(-0.20710678118654752).epsilon(1e-14));
}

TEST_CASE("dressed state examples") {
  const auto sym = dressed_states(AtomParams(0.0, 1.0, 1.0));
  CHECK(sym.omega_plus == doctest::Approx(1.0));
  CHECK(sym.omega_minus == doctest::Approx(-1.0));
  CHECK(sym.sin_phi == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(sym.cos_phi == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));

  const auto bare = dressed_states(AtomParams(2.0, 0.0, 1.0));
  CHECK(bare.nu == doctest::Approx(1.0));
  CHECK(bare.omega_plus == doctest::Approx(2.0));
  CHECK(bare.omega_minus == doctest::Approx(0.0));
  CHECK(bare.sin_phi == doctest::Approx(0.0));
  CHECK(bare.cos_phi == doctest::Approx(1.0));

  const auto mixed = dressed_states(AtomParams(1.0, 0.5, 1.0));
  CHECK(mixed.nu == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK(mixed.omega_plus == doctest::Approx(1.20710678118654752).epsilon(1e-14));
  CHECK(mixed.omega_minus == doctest::Approx(-0.20710678118654752).epsilon(1e-14));
}

TEST_CASE("degenerate point is flagged, not NaN") {
  const auto d = dressed_states(AtomParams(0.0, 0.0, 1.0));
  CHECK_FALSE(d.phi_defined);
  CHECK(d.nu == 0.0);
  CHECK(d.omega_plus == 0.0);
  CHECK(d.omega_minus == 0.0);
  CHECK(std::isfinite(d.sin_phi));
  CHECK(std::isfinite(d.cos_phi));
}

TEST_CASE("properties: spectral equivalence, unitarity, gap, phase freedom") {
  test::ParamGen gen(11);
  for (int i = 0; i < 100; ++i) {
    const AtomParams p = gen.params(2.0, 3.0);
    const auto h = build_closed_hamiltonian(p);

    // Hermitian by construction
    CHECK((h - h.adjoint()).norm() < 1e-14 * std::max(1.0, h.norm()));

    const auto d = dressed_states(p);
    if (!d.phi_defined) continue;

    CHECK(d.sin_phi * d.sin_phi + d.cos_phi * d.cos_phi == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(d.omega_plus - d.omega_minus == doctest::Approx(2.0 * d.nu).epsilon(1e-12));
    CHECK(d.omega_plus + d.omega_minus == doctest::Approx(p.delta).epsilon(1e-12));
    CHECK(d.nu >= std::abs(p.delta) / 2.0 - 1e-15);

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(h);
    CHECK(std::abs(solver.eigenvalues()[0] - d.omega_minus) < 1e-12);
    CHECK(std::abs(solver.eigenvalues()[1] - d.omega_plus) < 1e-12);

    // no exceptional points in the closed system: gap 2 nu > 0 away from
    // the trivial double-degenerate origin
    if (p.omega > 0.0 || p.delta != 0.0) CHECK(d.omega_plus - d.omega_minus > 0.0);

    // |+>, |-> reconstructed from the angle are orthonormal
    const Eigen::Matrix2cd basis = dressed_basis(d, p.theta);
    CHECK((basis.adjoint() * basis - Eigen::Matrix2cd::Identity()).norm() < 1e-12);

    // the basis actually diagonalizes H
    const Eigen::Matrix2cd diag = basis.adjoint() * h * basis;
    CHECK(std::abs(diag(0, 0) - d.omega_plus) < 1e-12);
    CHECK(std::abs(diag(1, 1) - d.omega_minus) < 1e-12);
    CHECK(std::abs(diag(0, 1)) < 1e-12);

    // eigenvalues are independent of the drive phase
    const AtomParams rotated(p.delta, p.omega, p.gamma, p.theta + gen.uniform(0.0, 6.0));
    const auto d2 = dressed_states(rotated);
    CHECK(d2.omega_plus == doctest::Approx(d.omega_plus).epsilon(1e-12));
    CHECK(d2.omega_minus == doctest::Approx(d.omega_minus).epsilon(1e-12));
  }
}
