#pragma once

#include <array>
#include <complex>

namespace lep {

// Roots of a monic real cubic  x^3 + a2 x^2 + a1 x + a0.
//
// roots[0] carries the distinguished real root; roots[1] and roots[2] the
// remaining pair. When the resolvent discriminant d = r^2 + q^3 is negative
// (three distinct real roots) the pair is evaluated with the trigonometric
// form, which keeps all roots exactly real and avoids the pair scrambling
// that principal-branch complex cube roots produce near a double root. For
// d >= 0 the pair is an exact complex-conjugate pair, degenerating to two
// equal reals at d = 0.
struct CubicRoots {
  std::array<std::complex<double>, 3> roots;
  double discriminant = 0.0;        // d = r^2 + q^3
  double discriminant_scale = 0.0;  // max(r^2, |q|^3); |d| below ~1e-12 of
                                    // this is numerically a double root
};

CubicRoots solve_cubic(double a2, double a1, double a0);

}  // namespace lep
