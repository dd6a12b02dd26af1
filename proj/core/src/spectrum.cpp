#include "lep/spectrum.hpp"

#include <cmath>
#include <numbers>

#include "lep/dynamics.hpp"

namespace lep {

namespace {

constexpr double kPi = std::numbers::pi;

double square(double v) { return v * v; }

void validate_freq_grid(std::span<const double> grid) {
  if (grid.empty()) throw InvalidParams("frequency grid must not be empty");
  for (double x : grid) {
    if (!std::isfinite(x)) throw InvalidParams("frequency grid must be finite");
  }
}

}  // namespace

double elastic_weight(const AtomParams& p) {
  if (p.delta != 0.0) throw NonResonantInput("elastic_weight closed form requires delta = 0");
  const double half_g2 = square(0.5 * p.gamma);
  return half_g2 / (half_g2 + 2.0 * square(p.omega));
}

double central_lorentzian(double gamma, double x) {
  const double a = 0.5 * gamma;
  return 0.5 / kPi * a / (a * a + x * x);
}

double mollow_sideband(const AtomParams& p, int side, double x) {
  const double g = p.gamma;
  const double w = mollow_frequency(p).real();
  const double half_g2 = square(0.5 * g);
  const double denom = 2.0 * square(p.omega) + half_g2;
  const double a = 0.75 * g;
  const double u = x - side * w;
  const double lor_weight = 0.5 - half_g2 / denom;
  const double disp_weight = g / w * (10.0 * square(p.omega) - half_g2) / denom;
  const double shape = a * a + u * u;
  return 0.5 / kPi * lor_weight * a / shape - side / (16.0 * kPi) * disp_weight * u / shape;
}

BelowEPWeights below_ep_weights(const AtomParams& p) {
  const double g = p.gamma;
  const double r = hyperbolic_rate(p);  // Gamma
  if (!(r > 0.0)) throw InvalidParams("below-EP weights need omega < gamma/8");
  const double half_g = 0.5 * g;
  const double o2 = square(p.omega);
  const double denom = half_g * half_g + 2.0 * o2;
  // Printed form times (2 Gamma + gamma/2)/(2 Gamma + gamma/2), using
  // (2 Gamma)^2 - (gamma/2)^2 = -16 omega^2 to clear the vanishing factor.
  const double l_plus =
      -(half_g * (half_g + 2.0 * r) - 4.0 * o2) * (2.0 * r + half_g) / (16.0 * r * denom);
  const double l_minus =
      8.0 * o2 * o2 / (32.0 * o2 * o2 - g * (10.0 * r + 4.5 * g) * o2 +
                       (2.0 * r + half_g) * half_g * half_g * half_g);
  return {l_plus, l_minus};
}

SpectrumResult spectrum_analytic(const AtomParams& p, std::span<const double> omega_grid) {
  if (p.delta != 0.0) throw NonResonantInput("analytic spectrum requires delta = 0");
  validate_freq_grid(omega_grid);
  const DrivingRegime regime = classify_regime(p);
  const double g = p.gamma;

  SpectrumResult out;
  out.regime = regime;
  out.method = SpectrumMethod::Analytic;
  out.elastic_weight = elastic_weight(p);
  out.omega_grid.assign(omega_grid.begin(), omega_grid.end());
  out.inelastic.reserve(omega_grid.size());

  switch (regime.tag) {
    case RegimeTag::AboveEP:
      for (double x : omega_grid) {
        out.inelastic.push_back(central_lorentzian(g, x) + mollow_sideband(p, +1, x) +
                                mollow_sideband(p, -1, x));
      }
      break;
    case RegimeTag::AtEP: {
      const double a2 = square(0.75 * g);
      for (double x : omega_grid) {
        const double x2 = x * x;
        const double singlet =
            -g / (4.0 * kPi) * (x2 + 3.0 * square(0.5 * g)) / square(x2 + a2);
        out.inelastic.push_back(central_lorentzian(g, x) + singlet);
      }
      break;
    }
    case RegimeTag::BelowEP: {
      const double r = hyperbolic_rate(p);
      const auto [l_plus, l_minus] = below_ep_weights(p);
      const double a_plus = 0.75 * g - r;
      const double a_minus = 0.75 * g + r;
      for (double x : omega_grid) {
        const double pair = l_plus / kPi * a_plus / (a_plus * a_plus + x * x) +
                            l_minus / kPi * a_minus / (a_minus * a_minus + x * x);
        out.inelastic.push_back(central_lorentzian(g, x) + pair);
      }
      break;
    }
  }
  return out;
}

SpectrumResult spectrum_numeric(const AtomParams& p, std::span<const double> omega_grid,
                                const NumericSpectrumOptions& opt) {
  validate_freq_grid(omega_grid);
  const DensityVector ss = steady_state(p);
  const double c0 = ss.rho11.real();
  if (!(c0 > 0.0)) throw InvalidParams("numeric spectrum requires omega > 0");

  // Unnormalized first-order correlator C(tau) on a uniform delay grid.
  const double dtau = opt.dtau / p.gamma;
  const std::size_t n = static_cast<std::size_t>(std::llround(opt.tau_max / opt.dtau)) + 1;
  std::vector<double> taus(n);
  for (std::size_t i = 0; i < n; ++i) taus[i] = static_cast<double>(i) * dtau;

  Eigen::Vector3cd v0;
  v0 << ss.rho11, Complex(0.0), Complex(0.0);
  const auto traj = integrate_regression(build_moment_system(p), ss.rho01, v0, taus);

  const Complex c_inf = ss.rho10 * ss.rho01;
  if (std::abs(traj.back()[0] - c_inf) > opt.tail_tol * c0) {
    throw TailNotConverged("correlator tail above tolerance at tau_max");
  }

  std::vector<Complex> resid(n);
  for (std::size_t i = 0; i < n; ++i) resid[i] = traj[i][0] - c_inf;

  SpectrumResult out;
  out.method = SpectrumMethod::Numeric;
  if (p.delta == 0.0) out.regime = classify_regime(p);
  out.elastic_weight = (c_inf / c0).real();
  out.omega_grid.assign(omega_grid.begin(), omega_grid.end());
  out.inelastic.reserve(omega_grid.size());

  for (double x : omega_grid) {
    // Trapezoid of Re[(C - C_inf) e^{i x tau}] with a phase recurrence over
    // the uniform grid.
    const Complex step = std::exp(Complex(0.0, x * dtau));
    Complex phase{1.0, 0.0};
    double acc = 0.5 * resid[0].real();
    for (std::size_t i = 1; i + 1 < n; ++i) {
      phase *= step;
      acc += (resid[i] * phase).real();
    }
    phase *= step;
    acc += 0.5 * (resid[n - 1] * phase).real();
    out.inelastic.push_back(acc * dtau / (kPi * c0));
  }
  return out;
}

}  // namespace lep
