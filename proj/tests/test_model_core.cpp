#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "support/test_support.hpp"

using namespace lep;

TEST_CASE("parameter validation and canonicalization") {
  CHECK_THROWS_AS(AtomParams(0.0, 1.0, 0.0), InvalidParams);
  CHECK_THROWS_AS(AtomParams(0.0, 1.0, -1.0), InvalidParams);
  CHECK_THROWS_AS(AtomParams(0.0, -0.5, 1.0), InvalidParams);
  CHECK_THROWS_AS(AtomParams(std::nan(""), 1.0, 1.0), InvalidParams);
  CHECK_THROWS_AS(AtomParams(0.0, 1.0, 1.0, std::numeric_limits<double>::infinity()),
                  InvalidParams);

  constexpr double pi = std::numbers::pi;
  CHECK(AtomParams(0, 0, 1, -pi / 2).theta == doctest::Approx(1.5 * pi).epsilon(1e-15));
  CHECK(AtomParams(0, 0, 1, 2 * pi).theta == doctest::Approx(0.0));
  CHECK(AtomParams(0, 0, 1, 7 * pi).theta == doctest::Approx(pi).epsilon(1e-12));
  const double canon = AtomParams(0, 0, 1, -1e-18).theta;
  CHECK(canon >= 0.0);
  CHECK(canon < 2 * pi);
}

TEST_CASE("regime classification at the resonant branch point") {
  const auto at = classify_regime(AtomParams(0.0, 1.0 / 8.0, 1.0));
  CHECK(at.tag == RegimeTag::AtEP);
  CHECK(at.distance == doctest::Approx(0.0));

  const auto below = classify_regime(AtomParams(0.0, 0.0, 1.0));
  CHECK(below.tag == RegimeTag::BelowEP);
  CHECK(below.distance == doctest::Approx(-0.125));

  const auto above = classify_regime(AtomParams(0.0, 1.0, 1.0));
  CHECK(above.tag == RegimeTag::AboveEP);
  CHECK(above.distance == doctest::Approx(0.875));

  CHECK_THROWS_AS(classify_regime(AtomParams(0.1, 1.0, 1.0)), NonResonantInput);

  // gamma scaling: the branch point sits at gamma/8 for any gamma
  CHECK(classify_regime(AtomParams(0.0, 0.25, 2.0)).tag == RegimeTag::AtEP);
}

TEST_CASE("classification is monotone in the drive") {
  const double ep = ep_drive(1.0);
  RegimeTag last = RegimeTag::BelowEP;
  for (double omega : test::lin_grid(0.0, 0.3, 601)) {
    const auto r = classify_regime(AtomParams(0.0, omega, 1.0));
    if (omega < ep - tol::ep_classify) CHECK(r.tag == RegimeTag::BelowEP);
    if (omega > ep + tol::ep_classify) CHECK(r.tag == RegimeTag::AboveEP);
    CHECK(static_cast<int>(r.tag) >= static_cast<int>(last));
    last = r.tag;
  }
}

TEST_CASE("splitting frequencies") {
  // coalescence point: both vanish
  CHECK(mollow_frequency(AtomParams(0.0, 0.125, 1.0)) == Complex(0.0, 0.0));
  CHECK(hyperbolic_rate(AtomParams(0.0, 0.125, 1.0)) == 0.0);

  // oscillatory side: sqrt(1 - 1/16)
  const Complex wt = mollow_frequency(AtomParams(0.0, 0.5, 1.0));
  CHECK(wt.imag() == 0.0);
  CHECK(wt.real() == doctest::Approx(std::sqrt(15.0) / 4.0).epsilon(1e-15));
  CHECK(wt.real() == doctest::Approx(0.96824583655185426).epsilon(1e-14));

  // hyperbolic side: zero drive decays at gamma/4
  CHECK(hyperbolic_rate(AtomParams(0.0, 0.0, 1.0)) == doctest::Approx(0.25));
  CHECK(mollow_frequency(AtomParams(0.0, 0.0, 1.0)).real() == 0.0);

  CHECK_THROWS_AS(mollow_frequency(AtomParams(0.2, 0.5, 1.0)), NonResonantInput);
  CHECK_THROWS_AS(hyperbolic_rate(AtomParams(0.2, 0.5, 1.0)), NonResonantInput);
}

TEST_CASE("exactly one splitting is active and the squares agree") {
  test::ParamGen gen(42);
  for (int i = 0; i < 200; ++i) {
    const double gamma = gen.uniform(0.5, 2.0);
    const double omega = gen.uniform(0.0, 0.5 * gamma);
    const AtomParams p(0.0, omega, gamma);
    const Complex wt = mollow_frequency(p);
    const double hr = hyperbolic_rate(p);
    const double radicand = 4.0 * omega * omega - gamma * gamma / 16.0;

    // Omega~^2 = (2 Omega)^2 - (gamma/4)^2 as a complex square, with the
    // hyperbolic companion carrying the negative part: Gamma^2 = max(0, -...)
    const Complex wt2 = wt * wt;
    CHECK(std::abs(wt2.imag()) < 1e-15 * gamma * gamma);
    CHECK(wt2.real() == doctest::Approx(radicand).epsilon(1e-12));
    CHECK(hr * hr == doctest::Approx(std::max(0.0, -radicand)).epsilon(1e-12));
    if (radicand > 0.0) {
      CHECK(wt.real() > 0.0);
      CHECK(hr == 0.0);
    } else if (radicand < 0.0) {
      CHECK(wt.real() == 0.0);
      CHECK(hr > 0.0);
    }
  }
}
