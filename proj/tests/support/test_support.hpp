#pragma once

// Shared helpers and independent oracles for the test suites. Everything
// here deliberately avoids the closed-form code paths it is used to check:
// eigenvalue gaps come from the dense solver, quadrature is plain
// trapezoid, and the density-matrix trajectory is integrated on the full
// 4x4 generator rather than the moment system.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numeric>
#include <random>
#include <span>
#include <vector>

#include <boost/numeric/odeint.hpp>

#include "lep/lep.hpp"

namespace lep::test {

inline std::vector<double> lin_grid(double lo, double hi, std::size_t n) {
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i)
    g[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  g.back() = hi;
  return g;
}

inline std::vector<double> log_grid(double lo, double hi, std::size_t n) {
  std::vector<double> g(n);
  const double step = std::log(hi / lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) g[i] = lo * std::exp(step * static_cast<double>(i));
  g.back() = hi;
  return g;
}

// Minimum over pairings of the largest elementwise mismatch: an
// order-independent distance between two eigenvalue multisets.
template <std::size_t N>
double multiset_distance(const std::array<Complex, N>& a, const std::array<Complex, N>& b) {
  std::array<int, N> idx;
  std::iota(idx.begin(), idx.end(), 0);
  double best = 1e300;
  do {
    double worst = 0.0;
    for (std::size_t i = 0; i < N; ++i) worst = std::max(worst, std::abs(a[i] - b[idx[i]]));
    best = std::min(best, worst);
  } while (std::next_permutation(idx.begin(), idx.end()));
  return best;
}

// Coefficients c of det(lambda I - M) = lambda^4 + c[0] lambda^3 + ... + c[3],
// by the Faddeev-LeVerrier recursion.
inline std::array<Complex, 4> char_poly_coefficients(const Eigen::Matrix4cd& m) {
  std::array<Complex, 4> c{};
  Eigen::Matrix4cd mk = m;
  for (int k = 1; k <= 4; ++k) {
    c[k - 1] = -mk.trace() / static_cast<double>(k);
    if (k < 4) mk = m * (mk + c[k - 1] * Eigen::Matrix4cd::Identity());
  }
  return c;
}

// Smallest eigenvalue gap among the three nontrivial modes, by the dense
// solver.
inline double min_nontrivial_gap(const AtomParams& p) {
  const auto spec = eigenvalues_numeric(build_liouvillian(p));
  double best = 1e300;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      best = std::min(best, std::abs(spec.lambdas[i] - spec.lambdas[j]));
  return best;
}

// Brute-force exceptional-point search: log-grid scan of the numeric
// eigenvalue gap over the drive axis, golden-section refinement of each
// local minimum.
inline std::vector<double> brute_force_ep_drives(double delta, double gamma,
                                                 std::size_t coarse = 2001) {
  auto gap = [&](double omega) { return min_nontrivial_gap(AtomParams(delta, omega, gamma)); };
  const auto omegas = log_grid(1e-4 * gamma, 0.25 * gamma, coarse);
  std::vector<double> gaps(omegas.size());
  for (std::size_t i = 0; i < omegas.size(); ++i) gaps[i] = gap(omegas[i]);

  std::vector<double> minima;
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  for (std::size_t i = 1; i + 1 < omegas.size(); ++i) {
    if (!(gaps[i] < gaps[i - 1] && gaps[i] < gaps[i + 1])) continue;
    double a = omegas[i - 1];
    double b = omegas[i + 1];
    double c = b - phi * (b - a);
    double d = a + phi * (b - a);
    double fc = gap(c);
    double fd = gap(d);
    while (b - a > 1e-12 * gamma) {
      if (fc < fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - phi * (b - a);
        fc = gap(c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + phi * (b - a);
        fd = gap(d);
      }
    }
    minima.push_back(0.5 * (a + b));
  }
  return minima;
}

inline double trapezoid(std::span<const double> xs, std::span<const double> ys) {
  double acc = 0.0;
  for (std::size_t i = 1; i < xs.size(); ++i)
    acc += 0.5 * (ys[i] + ys[i - 1]) * (xs[i] - xs[i - 1]);
  return acc;
}

// Mass of the analytic inelastic lineshape beyond |x| > cut, by trapezoid
// on the substitution u = 1/x (the lineshape is even on resonance).
inline double inelastic_tail_mass(const AtomParams& p, double cut, std::size_t n = 100001) {
  std::vector<double> us(n), integrand(n);
  std::vector<double> x(1);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = (1.0 / cut) * static_cast<double>(i) / static_cast<double>(n - 1);
    us[i] = u;
    if (u == 0.0) {
      integrand[i] = 0.0;
    } else {
      x[0] = 1.0 / u;
      integrand[i] = spectrum_analytic(p, x).inelastic[0] / (u * u);
    }
  }
  return 2.0 * trapezoid(us, integrand);
}

// Normalization oracle: elastic weight plus the trapezoid of the sampled
// lineshape over |x| <= cut plus the closed-tail mass beyond it.
inline double spectrum_total_mass(const AtomParams& p, double cut = 50.0,
                                  std::size_t points = 200001) {
  const auto grid = lin_grid(-cut * p.gamma, cut * p.gamma, points);
  const auto spec = spectrum_analytic(p, grid);
  return spec.elastic_weight + trapezoid(grid, spec.inelastic) +
         inelastic_tail_mass(p, cut * p.gamma);
}

// Density-vector trajectory on the full 4x4 generator, independent of the
// moment-equation engine.
inline std::vector<DensityVector> integrate_density(const AtomParams& p,
                                                    const DensityVector& rho0,
                                                    std::span<const double> t_grid) {
  namespace ode = boost::numeric::odeint;
  using State = std::array<Complex, 4>;
  const LiouvillianMatrix m = build_liouvillian(p);
  auto rhs = [&](const State& v, State& dvdt, double) {
    const Eigen::Map<const Eigen::Vector4cd> vv(v.data());
    Eigen::Map<Eigen::Vector4cd> out(dvdt.data());
    out = m * vv;
  };
  State state{rho0.rho00, rho0.rho11, rho0.rho10, rho0.rho01};
  std::vector<DensityVector> samples;
  auto observer = [&](const State& v, double) {
    samples.push_back(DensityVector{v[0], v[1], v[2], v[3]});
  };
  auto stepper =
      ode::make_controlled(1e-12, 1e-10, ode::runge_kutta_fehlberg78<State>());
  ode::integrate_times(stepper, rhs, state, t_grid.begin(), t_grid.end(),
                       0.05 / std::max(1.0, p.gamma), observer);
  return samples;
}

// Deterministic parameter generator for property tests.
class ParamGen {
 public:
  explicit ParamGen(unsigned seed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }

  AtomParams params(double max_delta = 0.5, double max_omega = 4.0) {
    return AtomParams(uniform(-max_delta, max_delta), uniform(0.0, max_omega),
                      uniform(0.5, 2.0), uniform(0.0, 6.28));
  }

 private:
  std::mt19937 rng_;
};

}  // namespace lep::test
