#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "support/test_support.hpp"

using namespace lep;

namespace {

Complex eval(double a2, double a1, double a0, Complex x) {
  return ((x + a2) * x + a1) * x + a0;
}

}  // namespace

TEST_CASE("three distinct real roots (trigonometric branch)") {
  // (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
  const auto r = solve_cubic(-6.0, 11.0, -6.0);
  CHECK(r.discriminant < 0.0);
  std::array<double, 3> roots{r.roots[0].real(), r.roots[1].real(), r.roots[2].real()};
  std::sort(roots.begin(), roots.end());
  CHECK(roots[0] == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(roots[1] == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(roots[2] == doctest::Approx(3.0).epsilon(1e-13));
  for (const auto& root : r.roots) CHECK(root.imag() == 0.0);
}

TEST_CASE("one real root and a conjugate pair") {
  // x^3 - 1: roots 1, exp(+-2 pi i / 3)
  const auto r = solve_cubic(0.0, 0.0, -1.0);
  CHECK(r.discriminant > 0.0);
  CHECK(r.roots[0].real() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(r.roots[0].imag() == 0.0);
  CHECK(r.roots[1] == std::conj(r.roots[2]));
  CHECK(r.roots[1].real() == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(std::abs(r.roots[1].imag()) == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-14));
}

TEST_CASE("double root sits on the discriminant boundary") {
  // (x-2)^2 (x+1) = x^3 - 3x^2 + 4
  const auto r = solve_cubic(-3.0, 0.0, 4.0);
  CHECK(std::abs(r.discriminant) <= 1e-12 * r.discriminant_scale);
  std::array<double, 3> roots{r.roots[0].real(), r.roots[1].real(), r.roots[2].real()};
  std::sort(roots.begin(), roots.end());
  CHECK(roots[0] == doctest::Approx(-1.0).epsilon(1e-10));
  // double roots are only sqrt(eps)-determined
  CHECK(roots[1] == doctest::Approx(2.0).epsilon(1e-7));
  CHECK(roots[2] == doctest::Approx(2.0).epsilon(1e-7));
}

TEST_CASE("random cubics: residuals and pairing structure") {
  test::ParamGen gen(7);
  for (int i = 0; i < 500; ++i) {
    const double a2 = gen.uniform(-5.0, 5.0);
    const double a1 = gen.uniform(-5.0, 5.0);
    const double a0 = gen.uniform(-5.0, 5.0);
    const auto r = solve_cubic(a2, a1, a0);
    const double scale = std::max({1.0, std::abs(a2), std::abs(a1), std::abs(a0)});
    for (const auto& root : r.roots) {
      CHECK(std::abs(eval(a2, a1, a0, root)) < 1e-11 * scale * scale);
    }
    if (r.discriminant > 1e-12 * r.discriminant_scale) {
      CHECK(r.roots[1] == std::conj(r.roots[2]));
      CHECK(r.roots[1].imag() != 0.0);
    } else if (r.discriminant < -1e-12 * r.discriminant_scale) {
      for (const auto& root : r.roots) CHECK(root.imag() == 0.0);
    }
    // Vieta: sum of roots = -a2
    const Complex sum = r.roots[0] + r.roots[1] + r.roots[2];
    CHECK(sum.real() == doctest::Approx(-a2).epsilon(1e-10));
    CHECK(std::abs(sum.imag()) < 1e-10 * scale);
  }
}

TEST_CASE("huge radicand stays stable (partner from s*t = -q)") {
  // roots 1000, and a pair near the origin: (x-1000)(x^2 + x + 1)
  const auto r = solve_cubic(-999.0, -999.0, -1000.0);
  CHECK(r.roots[0].real() == doctest::Approx(1000.0).epsilon(1e-13));
  CHECK(r.roots[1].real() == doctest::Approx(-0.5).epsilon(1e-9));
}
