#include "lep/cubic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace lep {

CubicRoots solve_cubic(double a2, double a1, double a0) {
  const double q = (3.0 * a1 - a2 * a2) / 9.0;
  const double r = (9.0 * a2 * a1 - 27.0 * a0 - 2.0 * a2 * a2 * a2) / 54.0;
  const double d = r * r + q * q * q;
  const double shift = a2 / 3.0;

  CubicRoots out;
  out.discriminant = d;
  out.discriminant_scale = std::max(r * r, std::abs(q * q * q));

  if (d < 0.0) {
    // Casus irreducibilis; q < 0 is implied. The acos argument is clamped
    // to absorb rounding right at a double root.
    const double m = std::sqrt(-q);
    const double arg = std::clamp(r / (m * m * m), -1.0, 1.0);
    const double phi = std::acos(arg);
    constexpr double two_pi = 2.0 * std::numbers::pi;
    out.roots[0] = 2.0 * m * std::cos(phi / 3.0) - shift;
    out.roots[1] = 2.0 * m * std::cos((phi + two_pi) / 3.0) - shift;
    out.roots[2] = 2.0 * m * std::cos((phi - two_pi) / 3.0) - shift;
    return out;
  }

  // Cube-root the larger-magnitude radicand and recover the partner from
  // s * t = -q, dodging the cancellation in r -+ sqrt(d).
  const double sqrt_d = std::sqrt(d);
  double s;
  double t;
  if (r >= 0.0) {
    s = std::cbrt(r + sqrt_d);
    t = (s != 0.0) ? -q / s : 0.0;
  } else {
    t = std::cbrt(r - sqrt_d);
    s = (t != 0.0) ? -q / t : 0.0;
  }
  out.roots[0] = s + t - shift;
  const double re = -0.5 * (s + t) - shift;
  const double im = 0.5 * std::sqrt(3.0) * (s - t);
  out.roots[1] = {re, im};
  out.roots[2] = {re, -im};
  return out;
}

}  // namespace lep
