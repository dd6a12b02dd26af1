#include "lep/model_core.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace lep {

namespace {

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) throw InvalidParams(std::string(name) + " must be finite");
}

}  // namespace

AtomParams::AtomParams(double delta_, double omega_, double gamma_, double theta_)
    : delta(delta_), omega(omega_), gamma(gamma_), theta(theta_) {
  require_finite(delta, "delta");
  require_finite(omega, "omega");
  require_finite(gamma, "gamma");
  require_finite(theta, "theta");
  if (gamma <= 0.0) throw InvalidParams("gamma must be positive");
  if (omega < 0.0) throw InvalidParams("omega must be non-negative");
  constexpr double two_pi = 2.0 * std::numbers::pi;
  theta = std::fmod(theta, two_pi);
  if (theta < 0.0) theta += two_pi;
  if (theta >= two_pi) theta = 0.0;  // rounding of fmod(-eps) + 2 pi
}

double ep_drive(double gamma) { return gamma / 8.0; }

DrivingRegime classify_regime(const AtomParams& p, double ep_tol) {
  if (p.delta != 0.0) throw NonResonantInput("classify_regime requires delta = 0");
  const double distance = (p.omega - ep_drive(p.gamma)) / p.gamma;
  RegimeTag tag = RegimeTag::AtEP;
  if (distance < -ep_tol) {
    tag = RegimeTag::BelowEP;
  } else if (distance > ep_tol) {
    tag = RegimeTag::AboveEP;
  }
  return {tag, distance};
}

Complex mollow_frequency(const AtomParams& p) {
  if (p.delta != 0.0) throw NonResonantInput("mollow_frequency requires delta = 0");
  // (2 omega)^2 - (gamma/4)^2 as a product, exact at the branch point.
  const double radicand = (2.0 * p.omega - 0.25 * p.gamma) * (2.0 * p.omega + 0.25 * p.gamma);
  if (radicand >= 0.0) return {std::sqrt(radicand), 0.0};
  return {0.0, std::sqrt(-radicand)};
}

double hyperbolic_rate(const AtomParams& p) {
  if (p.delta != 0.0) throw NonResonantInput("hyperbolic_rate requires delta = 0");
  const double radicand = (0.25 * p.gamma - 2.0 * p.omega) * (0.25 * p.gamma + 2.0 * p.omega);
  return radicand > 0.0 ? std::sqrt(radicand) : 0.0;
}

}  // namespace lep
