#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "quasiprob/wigner.hpp"

using namespace quasiprob;

namespace {
constexpr double kPi = std::numbers::pi;

std::size_t origin_index(const std::vector<double>& g) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < g.size(); ++i)
    if (std::abs(g[i]) < std::abs(g[best])) best = i;
  return best;
}
}  // namespace

TEST_CASE("state construction and norms") {
  for (const char* spec : {"gaussian", "hermite1", "squeezed:0.5"}) {
    WaveFunction psi = make_state(spec);
    CHECK(psi.norm() == doctest::Approx(1.0).epsilon(1e-10));
  }
  CHECK_THROWS_AS(make_state("bogus"), std::invalid_argument);
  CHECK_THROWS_AS(make_state("squeezed:-1"), std::invalid_argument);

  WaveFunction h1 = make_state("hermite1");
  const std::size_t mid = origin_index(h1.x);
  CHECK(std::abs(h1.psi[mid]) < 1e-12);  // odd state vanishes at the origin
}

TEST_CASE("gaussian phase-space density") {
  WignerGrid W = wigner_transform(make_state("gaussian"));
  const std::size_t i0 = origin_index(W.x), j0 = origin_index(W.p);
  CHECK(W.at(i0, j0) == doctest::Approx(1.0 / kPi).epsilon(1e-8));
  CHECK(wigner_mass(W) == doctest::Approx(1.0).epsilon(1e-8));

  HudsonReport h = hudson_check(W);
  CHECK(h.nonnegative);
  CHECK(h.min_value >= -1e-10);

  UncertaintyReport u = uncertainty_product(W);
  CHECK(u.sigma_x == doctest::Approx(std::sqrt(0.5)).epsilon(1e-8));
  CHECK(u.sigma_p == doctest::Approx(std::sqrt(0.5)).epsilon(1e-8));
  CHECK(u.product == doctest::Approx(0.5).epsilon(1e-6));

  // Closed form W = (1/pi) e^{-x^2 - p^2} on a spot check away from the origin.
  CHECK(W.at(i0 + 32, j0 + 16) ==
        doctest::Approx(std::exp(-W.x[i0 + 32] * W.x[i0 + 32] - W.p[j0 + 16] * W.p[j0 + 16]) / kPi)
            .epsilon(1e-7)
            .scale(1.0));
}

TEST_CASE("first excited state goes negative at the origin") {
  WignerGrid W = wigner_transform(make_state("hermite1"));
  const std::size_t i0 = origin_index(W.x), j0 = origin_index(W.p);
  CHECK(W.at(i0, j0) == doctest::Approx(-1.0 / kPi).epsilon(1e-6));
  CHECK(wigner_mass(W) == doctest::Approx(1.0).epsilon(1e-8));

  HudsonReport h = hudson_check(W);
  CHECK_FALSE(h.nonnegative);
  CHECK(h.min_value == doctest::Approx(-1.0 / kPi).epsilon(1e-6));
  CHECK(std::abs(h.x_at) < 1e-10);
  CHECK(std::abs(h.p_at) < 1e-10);

  UncertaintyReport u = uncertainty_product(W);
  CHECK(u.product == doctest::Approx(1.5).epsilon(1e-6));
}

TEST_CASE("marginals recover position and momentum densities") {
  WaveFunction psi = make_state("gaussian");
  WignerGrid W = wigner_transform(psi);
  std::vector<double> mx = x_marginal(W);
  double sup = 0.0;
  for (std::size_t i = 0; i < W.x.size(); ++i)
    sup = std::max(sup, std::abs(mx[i] - std::norm(psi.psi[i])));
  CHECK(sup < 1e-6);

  std::vector<double> mp = p_marginal(W);
  std::vector<double> md = momentum_density(psi, W.p);
  sup = 0.0;
  for (std::size_t j = 0; j < W.p.size(); ++j) sup = std::max(sup, std::abs(mp[j] - md[j]));
  CHECK(sup < 1e-6);

  // Gaussian momentum density is known in closed form.
  const std::size_t j0 = origin_index(W.p);
  CHECK(md[j0] == doctest::Approx(1.0 / std::sqrt(kPi)).epsilon(1e-8));
}

TEST_CASE("squeezed state keeps the minimal product") {
  WignerGrid W = wigner_transform(make_state("squeezed:2", {16.0, 683}), SymmetricGrid{16.0, 683});
  CHECK(hudson_check(W).nonnegative);
  UncertaintyReport u = uncertainty_product(W);
  CHECK(u.sigma_x == doctest::Approx(2.0 * std::sqrt(0.5)).epsilon(1e-6));
  CHECK(u.product == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("origin value against a direct quadrature oracle") {
  // W(0,0) = (1/2pi) int psi(s/2) conj(psi(-s/2)) ds.
  WaveFunction psi = make_state("hermite1");
  const double oracle = oracles::simpson(
      [](double s) {
        const double a = 0.5 * s;
        const double v = std::sqrt(2.0) * std::pow(kPi, -0.25);
        return (v * a * std::exp(-0.5 * a * a)) * (v * (-a) * std::exp(-0.5 * a * a));
      },
      -16.0, 16.0, 20000) / (2.0 * kPi);
  CHECK(oracle == doctest::Approx(-1.0 / kPi).epsilon(1e-10));
  WignerGrid W = wigner_transform(psi);
  CHECK(W.at(origin_index(W.x), origin_index(W.p)) == doctest::Approx(oracle).epsilon(1e-6));
}

TEST_CASE("translation covariance of the position marginal") {
  const double shift = 0.75;
  WaveFunction psi = make_state("gaussian");
  WaveFunction moved = psi;
  for (std::size_t i = 0; i < moved.x.size(); ++i) {
    const double x = moved.x[i] - shift;
    moved.psi[i] = std::pow(kPi, -0.25) * std::exp(-0.5 * x * x);
  }
  WignerGrid W = wigner_transform(moved);
  std::vector<double> mx = x_marginal(W);
  double mean = 0.0, mass = 0.0;
  const double h = W.x[1] - W.x[0];
  for (std::size_t i = 0; i < W.x.size(); ++i) {
    mean += W.x[i] * mx[i] * h;
    mass += mx[i] * h;
  }
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(mean == doctest::Approx(shift).epsilon(1e-6));
}

TEST_CASE("non-normalized input is rejected") {
  WaveFunction psi = make_state("gaussian");
  for (auto& v : psi.psi) v *= 1.01;
  CHECK_THROWS_AS(wigner_transform(psi), std::invalid_argument);
}
