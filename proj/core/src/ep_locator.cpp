#include "lep/ep_locator.hpp"

#include <algorithm>
#include <cmath>

#include "lep/cubic.hpp"
#include "lep/liouvillian.hpp"
#include "lep/sweep.hpp"

namespace lep {

namespace {

void validate(const EPQuery& q) {
  if (!std::isfinite(q.delta)) throw InvalidParams("delta must be finite");
  if (!(q.gamma > 0.0) || !std::isfinite(q.gamma)) throw InvalidParams("gamma must be positive");
}

// Eigenvalue degeneracy is built into every sextic root; what separates an
// exceptional point from a diabolic crossing is the eigenvector overlap of
// the closest pair. The gap bound is looser than the reporting tolerance in
// eigenvalues_numeric because the degeneracy condition loses accuracy near
// the critical detuning, where the two roots collide; the overlap stays
// within 1e-6 of unity there while a diabolic pair would sit near zero.
bool is_exceptional(double delta, double omega, double gamma) {
  const auto spec = eigenvalues_numeric(build_liouvillian(AtomParams(delta, omega, gamma)));
  int bi = 0;
  int bj = 1;
  double gap = 1e300;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const double g = std::abs(spec.lambdas[i] - spec.lambdas[j]);
      if (g < gap) {
        gap = g;
        bi = i;
        bj = j;
      }
    }
  }
  if (gap > 1e-3 * gamma) return false;
  const auto& vi = spec.eigenvectors[bi];
  const auto& vj = spec.eigenvectors[bj];
  return std::abs(vi.dot(vj)) / (vi.norm() * vj.norm()) > 1.0 - 1e-4;
}

}  // namespace

double critical_detuning(double gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) throw InvalidParams("gamma must be positive");
  return gamma / (6.0 * std::sqrt(3.0));
}

SexticCoefficients sextic_coefficients(const EPQuery& q) {
  validate(q);
  const double g = q.gamma;
  const double d2 = q.delta * q.delta;
  const double d8sq = (q.delta / 8.0) * (q.delta / 8.0);
  const double ring = d2 + (0.5 * g) * (0.5 * g);
  return {3.0 * 0.25 * d2 - (g / 8.0) * (g / 8.0),  //
          d8sq * (12.0 * d2 - 5.0 * g * g),         //
          d8sq * ring * ring};
}

double sextic_residual(const EPQuery& q, double omega) {
  const auto [b2, b1, b0] = sextic_coefficients(q);
  const double x = omega * omega;
  return ((x + b2) * x + b1) * x + b0;
}

EPResult solve_ep_sextic(const EPQuery& q) {
  validate(q);
  EPResult out;
  out.delta = q.delta;
  out.critical_delta = critical_detuning(q.gamma);

  const auto [b2, b1, b0] = sextic_coefficients(q);
  std::vector<double> candidates;  // in x = omega^2
  bool polish = true;

  if (b1 == 0.0 && b0 == 0.0) {
    // Resonance factors the sextic as x^2 (x + b2). The quadruple root at
    // zero drive is not an exceptional point; only the simple root stays,
    // and its square root is exact, so no polish is needed.
    out.discriminant = 0.0;
    if (-b2 > 0.0) candidates.push_back(-b2);
    polish = false;
  } else {
    const CubicRoots cubic = solve_cubic(b2, b1, b0);
    out.discriminant = cubic.discriminant;
    const double near_zero = 1e-12 * cubic.discriminant_scale;
    if (cubic.discriminant < -near_zero) {
      for (const auto& root : cubic.roots) candidates.push_back(root.real());
    } else if (cubic.discriminant <= near_zero) {
      // Double root of the bi-cubic: the two branches have merged.
      candidates.push_back(cubic.roots[0].real());
      candidates.push_back(cubic.roots[1].real());
    } else {
      candidates.push_back(cubic.roots[0].real());
    }
  }

  const double spurious_cut = 1e-8 * q.gamma;
  std::vector<double> omegas;
  for (double x : candidates) {
    if (!(x > spurious_cut * spurious_cut)) continue;
    double w = std::sqrt(x);
    if (polish) {
      // One Newton step on the sextic absorbs rounding in the coefficient
      // arithmetic; the trust region keeps a (near-)double root from
      // launching a wild correction.
      const double res = sextic_residual(q, w);
      const double x2 = w * w;
      const double slope = 2.0 * w * ((3.0 * x2 + 2.0 * b2) * x2 + b1);
      if (slope != 0.0) {
        const double step = res / slope;
        if (std::abs(step) < 1e-3 * std::max(w, 1e-3 * q.gamma)) w -= step;
      }
    }
    if (w > spurious_cut) omegas.push_back(w);
  }
  std::sort(omegas.begin(), omegas.end());
  omegas.erase(std::unique(omegas.begin(), omegas.end(),
                           [&](double a, double b) { return b - a < 1e-10 * q.gamma; }),
               omegas.end());

  // Eigenvalue degeneracy is necessary but not sufficient; keep only the
  // candidates whose numeric spectrum shows genuine eigenvector coalescence.
  std::erase_if(omegas, [&](double w) { return !is_exceptional(q.delta, w, q.gamma); });

  // Deterministic single root inside the merge band around the critical
  // detuning, where the two branches collide.
  if (omegas.size() == 2 &&
      std::abs(std::abs(q.delta) - out.critical_delta) < 1e-8 * q.gamma) {
    omegas = {0.5 * (omegas[0] + omegas[1])};
  }

  out.omegas = std::move(omegas);
  return out;
}

std::vector<EPResult> ep_sweep(double gamma, std::span<const double> delta_grid, unsigned jobs) {
  for (double d : delta_grid) {
    if (!std::isfinite(d)) throw InvalidParams("delta grid must be finite");
  }
  std::vector<EPResult> out(delta_grid.size());
  parallel_for_indexed(delta_grid.size(), jobs,
                       [&](std::size_t i) { out[i] = solve_ep_sextic({delta_grid[i], gamma}); });
  return out;
}

}  // namespace lep
