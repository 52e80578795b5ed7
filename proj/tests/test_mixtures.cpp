#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "quasiprob/mixtures.hpp"
#include "quasiprob/quadrature.hpp"

using namespace quasiprob;

namespace {
constexpr double kPi = std::numbers::pi;
double quartic_closed(double x) { return (4.0 / kPi) / (4.0 + x * x * x * x); }
}  // namespace

TEST_CASE("smn density closed-form anchors") {
  CHECK(smn_density(SignedMixingMeasure::atoms({{1.0, 1.0}}, true), 0.0) ==
        doctest::Approx(1.0 / std::sqrt(2.0 * kPi)).epsilon(1e-10));
  const SmnFamily& lap = smn_family("laplace");
  CHECK(smn_density(lap.mixing, 1.0) == doctest::Approx(0.5 * std::exp(-1.0)).epsilon(1e-8));
  const SmnFamily& cau = smn_family("cauchy");
  CHECK(smn_density(cau.mixing, 2.0) == doctest::Approx(1.0 / (5.0 * kPi)).epsilon(1e-8));
  CHECK_THROWS_AS(smn_family("frechet"), std::invalid_argument);
}

TEST_CASE("smn charfn") {
  SignedMixingMeasure delta = SignedMixingMeasure::atoms({{1.0, 1.0}}, true);
  for (double t : {0.0, 0.5, 1.0, 2.0})
    CHECK(smn_charfn(delta, t) == doctest::Approx(std::exp(-0.5 * t * t)).epsilon(1e-12));
  const SmnFamily& lap = smn_family("laplace");
  CHECK(smn_charfn(lap.mixing, 1.0) == doctest::Approx(0.5).epsilon(1e-8));
  CHECK(smn_charfn(lap.mixing, 0.0) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("catalog closed forms are consistent with their mixings") {
  for (const SmnFamily& fam : smn_catalog()) {
    if (!fam.density_closed_form) continue;
    for (double x : {0.0, 0.7, 1.5, 3.0}) {
      CHECK(smn_density(fam.mixing, x) ==
            doctest::Approx(fam.density_closed_form(x)).epsilon(5e-7).scale(1.0));
    }
  }
}

TEST_CASE("quartic signed mixture") {
  SignedMixingMeasure qm = quartic_mixing();
  CHECK_FALSE(qm.kind() == SignedMixingMeasure::Kind::Atoms);

  // Signed: negative on the second sine half-period.
  CHECK(qm.reciprocal_density_at(1.0) > 0.0);
  CHECK(qm.reciprocal_density_at(4.5) < 0.0);

  double sup = 0.0, lo = 0.0;
  for (int i = 0; i <= 50; ++i) {
    const double x = -5.0 + 0.2 * i;
    const double v = smn_density(qm, x);
    sup = std::max(sup, std::abs(v - quartic_closed(x)));
    lo = std::min(lo, v);
  }
  CHECK(sup < 1e-6);
  CHECK(lo >= -1e-10);
  CHECK(smn_density(qm, 0.0) == doctest::Approx(1.0 / kPi).epsilon(1e-8));
  CHECK(smn_density(qm, 1.0) == doctest::Approx((4.0 / kPi) / 5.0).epsilon(1e-8));

  // Its charfn in closed form.
  for (double t : {0.3, 1.0, 2.5})
    CHECK(smn_charfn(qm, t) ==
          doctest::Approx(std::exp(-t) * (std::cos(t) + std::sin(t))).epsilon(1e-7).scale(1.0));
}

TEST_CASE("linnik characteristic function") {
  CHECK(linnik_charfn(2.0, 1.0) == doctest::Approx(0.5));
  CHECK(linnik_charfn(0.7, 0.0) == doctest::Approx(1.0));
  CHECK(linnik_charfn(1.0, 3.0) == doctest::Approx(0.25));
  CHECK_THROWS_AS(linnik_charfn(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(linnik_charfn(4.5, 1.0), std::domain_error);
}

TEST_CASE("linnik density") {
  // alpha = 2 is the Laplace law.
  for (double x : {0.0, 0.5, 1.0, 2.0})
    CHECK(linnik_density(2.0, x).value ==
          doctest::Approx(0.5 * std::exp(-std::abs(x))).epsilon(1e-6).scale(1.0));
  CHECK(linnik_density(2.0, 0.0).value == doctest::Approx(0.5).epsilon(1e-6));

  // Symmetry.
  CHECK(linnik_density(1.5, 1.3).value ==
        doctest::Approx(linnik_density(1.5, -1.3).value).epsilon(1e-12));

  // alpha = 1 at 0: divergent inversion integral, flagged.
  LinnikResult at0 = linnik_density(1.0, 0.0);
  CHECK(at0.slowly_convergent);
  CHECK(std::isfinite(at0.value));

  // alpha > 2: extraordinary branch flag.
  CHECK(linnik_density(3.0, 1.0).extraordinary);
  CHECK_FALSE(linnik_density(1.5, 1.0).extraordinary);

  // alpha in (1, 2): closed-form value at 0 is 1/(alpha sin(pi/alpha)).
  const double a = 1.5;
  CHECK(linnik_density(a, 0.0).value ==
        doctest::Approx(1.0 / (a * std::sin(kPi / a))).epsilon(1e-8));
}

TEST_CASE("linnik mass check") {
  for (double a : {0.5, 1.0, 1.5, 2.0}) {
    LinnikMassReport m = linnik_mass_check(a);
    CHECK(std::abs(m.total - 1.0) < 1e-6);
    CHECK(m.tail >= 0.0);
  }
}

TEST_CASE("positive stable density") {
  // rho = 1/2 closed form.
  for (double x : {0.2, 1.0, 3.0})
    CHECK(stable_positive_density(0.5, x) ==
          doctest::Approx(0.5 / std::sqrt(kPi) * std::pow(x, -1.5) * std::exp(-0.25 / x))
              .epsilon(1e-12));
  // The Zolotarev branch agrees with the closed form near rho = 1/2.
  for (double x : {0.5, 1.0, 2.0})
    CHECK(stable_positive_density(0.5 + 1e-7, x) ==
          doctest::Approx(stable_positive_density(0.5, x)).epsilon(1e-4));
  // Laplace transform check at rho = 0.75 (integrand is negligible past 40).
  QuadResult lt = integrate_adaptive(
      [](double x) { return x > 0.0 ? std::exp(-2.0 * x) * stable_positive_density(0.75, x) : 0.0; },
      0.0, 40.0, 1e-9);
  CHECK(lt.value == doctest::Approx(std::exp(-std::pow(2.0, 0.75))).epsilon(1e-5));
}

TEST_CASE("exponential power mixing") {
  SignedMixingMeasure m2 = exp_power_mixing(2.0);
  CHECK(m2.kind() == SignedMixingMeasure::Kind::Atoms);
  CHECK(smn_charfn(m2, 1.3) == doctest::Approx(std::exp(-1.69)).epsilon(1e-12));

  SignedMixingMeasure m1 = exp_power_mixing(1.0);
  for (double t : {0.25, 1.0, 2.0})
    CHECK(smn_charfn(m1, t) == doctest::Approx(std::exp(-t)).epsilon(1e-6).scale(1.0));

  for (double a : {0.5, 1.0, 1.5}) {
    SignedMixingMeasure m = exp_power_mixing(a);
    for (int i = 1; i <= 12; ++i) CHECK(m.density_at(0.5 * i) >= 0.0);
  }
}

TEST_CASE("multivariate sin-weighted identity") {
  MvQuarticReport r1 = multivariate_quartic_check(1, {1.0}, {0.0});
  CHECK(r1.kappa == doctest::Approx(2.0 / std::sqrt(2.0 * kPi)).epsilon(1e-8));

  MvQuarticReport unit = multivariate_quartic_check(2, {1, 0, 0, 1}, {1.0, 0.0});
  CHECK(unit.rhs == doctest::Approx(0.5).epsilon(1e-12));

  MvQuarticReport base = multivariate_quartic_check(2, {1, 0, 0, 1}, {0.0, 0.0});
  for (double r : {0.5, 1.0, 2.0}) {
    MvQuarticReport rep = multivariate_quartic_check(2, {1, 0, 0, 1}, {r, r});
    CHECK(rep.kappa == doctest::Approx(base.kappa).epsilon(1e-5));
  }

  MvQuarticReport tri = multivariate_quartic_check(
      3, {2, 0.3, 0, 0.3, 1, 0.1, 0, 0.1, 1.5}, {0.4, -0.2, 0.7});
  CHECK(tri.kappa == doctest::Approx(tri.lhs / tri.rhs).epsilon(1e-12));

  CHECK_THROWS_AS(multivariate_quartic_check(4, std::vector<double>(16, 1.0),
                                             std::vector<double>(4, 0.0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(multivariate_quartic_check(2, {1, 0.5, 0.4, 1}, {0.0, 0.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(multivariate_quartic_check(2, {-1, 0, 0, 1}, {0.0, 0.0}),
                  std::invalid_argument);
}

TEST_CASE("gneiting uncertainty product") {
  GneitingResult n = gneiting_product(smn_family("normal"));
  CHECK(n.applicable);
  CHECK_FALSE(n.infinite);
  CHECK(n.product == doctest::Approx(1.0).epsilon(1e-6));

  CHECK(gneiting_product(smn_family("laplace")).infinite);
  CHECK(gneiting_product(smn_family("cauchy")).infinite);
  CHECK(std::isinf(gneiting_product(smn_family("laplace")).product));

  GneitingResult mix = gneiting_product(smn_family("normal_mix"));
  CHECK(mix.product == doctest::Approx(std::sqrt(1.875)).epsilon(1e-6));
  CHECK(mix.product > 1.0);

  CHECK_FALSE(gneiting_product(smn_family("quartic")).applicable);
}
