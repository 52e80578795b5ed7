#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "quasiprob/quasibayes.hpp"

using namespace quasiprob;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("two-condition three-state marginal") {
  ConditionalTable tbl = feynman_table();
  CHECK_NOTHROW(tbl.validate());
  SignedPmf m = total_probability(tbl);
  CHECK(m.atoms[0].second == doctest::Approx(0.09).epsilon(1e-14));
  CHECK(m.atoms[1].second == doctest::Approx(0.78).epsilon(1e-14));
  CHECK(m.atoms[2].second == doctest::Approx(0.13).epsilon(1e-14));
  CHECK(m.total_mass() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(m.is_ordinary());

  // The table itself holds a negative conditional.
  bool has_negative = false;
  for (const auto& col : tbl.entries)
    for (double v : col)
      if (v < 0.0) has_negative = true;
  CHECK(has_negative);
}

TEST_CASE("malformed conditional tables are rejected") {
  ConditionalTable tbl = feynman_table();
  tbl.base[0] = 0.8;  // base rates no longer sum to one
  CHECK_THROWS_AS(tbl.validate(), std::invalid_argument);

  ConditionalTable col = feynman_table();
  col.entries[0][0] += 0.2;  // column mass broken
  CHECK_THROWS_AS(col.validate(), std::invalid_argument);

  ConditionalTable shape = feynman_table();
  shape.entries[1].pop_back();
  CHECK_THROWS_AS(shape.validate(), std::invalid_argument);
}

TEST_CASE("signed mixture prior density and grid minimum") {
  SignedMixturePrior prior({{1.0, 1.0, 2.0}, {1.0, 2.0, -1.0}});
  CHECK(prior.weight_sum() == doctest::Approx(1.0));
  // 2 e^{-z} - 2 e^{-2z}, nonnegative even with the negative weight.
  CHECK(prior.density(1.0) ==
        doctest::Approx(2.0 * std::exp(-1.0) - 2.0 * std::exp(-2.0)).epsilon(1e-14));
  CHECK(prior.min_on_grid() >= -1e-10);
  CHECK(prior.is_ordinary());

  SignedMixturePrior bad({{1.0, 1.0, -0.5}, {1.0, 2.0, 1.5}});
  CHECK_FALSE(bad.is_ordinary());
}

TEST_CASE("signed posterior, exponential likelihood worked example") {
  SignedMixturePrior prior({{1.0, 1.0, 2.0}, {1.0, 2.0, -1.0}});
  PosteriorResult r = signed_posterior(prior, Likelihood::Exponential, 1.0);
  CHECK(r.marginal == doctest::Approx(5.0 / 18.0).epsilon(1e-14));
  CHECK(r.evidence[0] == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(r.evidence[1] == doctest::Approx(2.0 / 9.0).epsilon(1e-14));

  const auto& post = r.posterior.components();
  CHECK(post[0].weight == doctest::Approx(1.8).epsilon(1e-12));
  CHECK(post[1].weight == doctest::Approx(-0.8).epsilon(1e-12));
  CHECK(post[0].shape == doctest::Approx(2.0));
  CHECK(post[0].rate == doctest::Approx(2.0));
  CHECK(post[1].rate == doctest::Approx(3.0));
  CHECK(r.posterior.weight_sum() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.posterior.min_on_grid() >= -1e-10);

  // Pointwise Bayes rule against a direct quadrature oracle.
  auto joint = [&prior](double z, double y) { return prior.density(z) * z * std::exp(-z * y); };
  for (double z : {0.3, 1.0, 2.5}) {
    const double expect = joint(z, 1.0) / r.marginal;
    CHECK(r.posterior.density(z) == doctest::Approx(expect).epsilon(1e-10));
  }
  const double m_oracle =
      oracles::simpson([&joint](double z) { return joint(z, 1.0); }, 0.0, 60.0, 200000);
  CHECK(r.marginal == doctest::Approx(m_oracle).epsilon(1e-9));
}

TEST_CASE("signed posterior, poisson likelihood") {
  SignedMixturePrior prior({{1.0, 1.0, 2.0}, {1.0, 2.0, -1.0}});
  PosteriorResult r = signed_posterior(prior, Likelihood::Poisson, 2.0);
  // c(s) = s Gamma(3) / (2! (s+1)^3) for shape 1.
  CHECK(r.evidence[0] == doctest::Approx(1.0 / 8.0).epsilon(1e-13));
  CHECK(r.evidence[1] == doctest::Approx(2.0 / 27.0).epsilon(1e-13));
  CHECK(r.marginal == doctest::Approx(0.25 - 2.0 / 27.0).epsilon(1e-13));
  CHECK(r.posterior.components()[0].shape == doctest::Approx(3.0));
  CHECK(r.posterior.components()[0].rate == doctest::Approx(2.0));
  CHECK(r.posterior.weight_sum() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("signed posterior, normal likelihood updates weights only") {
  SignedMixturePrior prior({{1.0, 1.0, 2.0}, {1.0, 2.0, -1.0}});
  PosteriorResult r = signed_posterior(prior, Likelihood::Normal, 0.5, 1.0);
  // c(s) = s e^{s^2/2 - s y} Phi(y - s), sigma = 1.
  auto phi = [](double t) { return 0.5 * std::erfc(-t / std::sqrt(2.0)); };
  CHECK(r.evidence[0] == doctest::Approx(std::exp(0.5 - 0.5) * phi(-0.5)).epsilon(1e-12));
  CHECK(r.evidence[1] == doctest::Approx(2.0 * std::exp(2.0 - 1.0) * phi(-1.5)).epsilon(1e-12));
  // Components keep shape and rate, only weights move.
  CHECK(r.posterior.components()[0].shape == doctest::Approx(1.0));
  CHECK(r.posterior.components()[0].rate == doctest::Approx(1.0));
  CHECK(r.posterior.weight_sum() == doctest::Approx(1.0).epsilon(1e-12));

  // Quadrature oracle for the first evidence term.
  const double oracle = oracles::simpson(
      [](double z) {
        return std::exp(-z) * std::exp(-0.5 * (0.5 - z) * (0.5 - z)) / std::sqrt(2.0 * kPi);
      },
      0.0, 40.0, 400000);
  CHECK(r.evidence[0] == doctest::Approx(oracle).epsilon(1e-9));
}

TEST_CASE("single ordinary component recovers plain conjugate bayes") {
  SignedMixturePrior prior({{1.0, 2.0, 1.0}});
  PosteriorResult r = signed_posterior(prior, Likelihood::Exponential, 3.0);
  CHECK(r.posterior.components()[0].weight == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(r.marginal == doctest::Approx(2.0 / 25.0).epsilon(1e-14));
  CHECK(r.posterior.density(1.0) ==
        doctest::Approx(25.0 * 1.0 * std::exp(-5.0)).epsilon(1e-12));
}

TEST_CASE("negative marginal is rejected") {
  SignedMixturePrior prior({{1.0, 1.0, 5.0}, {1.0, 2.0, -4.0}});
  // m(9) = 5/100 - 8/121 < 0, so conditioning is undefined there.
  CHECK_THROWS_AS(signed_posterior(prior, Likelihood::Exponential, 9.0), std::domain_error);
}

TEST_CASE("sine coefficients of a single mode") {
  SineSeriesSolution s = sine_coeffs([](double x) { return std::sin(2.0 * x); }, 8);
  for (int n = 1; n <= 8; ++n)
    CHECK(s.coeffs[n - 1] == doctest::Approx(n == 2 ? 1.0 : 0.0).epsilon(1e-10).scale(1.0));
  CHECK(evolve_and_eval(s, 1.0, 0.5) ==
        doctest::Approx(std::sin(2.0) * std::exp(-2.0)).epsilon(1e-10));
}

TEST_CASE("bump coefficients match the closed form") {
  SineSeriesSolution s = bump_solution(32);
  for (int n = 1; n <= 32; ++n)
    CHECK(s.coeffs[n - 1] == doctest::Approx(bump_coeff_exact(n)).epsilon(1e-10).scale(1.0));
  // p_2 = 0 by symmetry, p_1 = (4/pi^2) sqrt(2).
  CHECK(bump_coeff_exact(2) == doctest::Approx(0.0).scale(1.0));
  CHECK(bump_coeff_exact(1) == doctest::Approx(4.0 * std::sqrt(2.0) / (kPi * kPi)).epsilon(1e-14));
  // Mixed signs: the series is a signed representation of a nonnegative profile.
  bool neg = false;
  for (double c : s.coeffs) neg = neg || c < -1e-6;
  CHECK(neg);
}

TEST_CASE("bump evolution against a crank-nicolson oracle") {
  SineSeriesSolution s = bump_solution(64);
  const double t = 0.1;
  const int points = 513;
  std::vector<double> cn = oracles::crank_nicolson_heat(bump_initial, t, points, 1e-5);
  double sup = 0.0, lo = 0.0;
  const double dx = kPi / (points - 1);
  for (int i = 0; i < points; ++i) {
    const double v = evolve_and_eval(s, i * dx, t);
    sup = std::max(sup, std::abs(v - cn[i]));
    lo = std::min(lo, v);
  }
  CHECK(sup < 1e-4);
  CHECK(lo >= -1e-6);
}

TEST_CASE("evolution boundary values and mass decay") {
  SineSeriesSolution s = bump_solution(64);
  CHECK(std::abs(evolve_and_eval(s, 0.0, 0.2)) < 1e-12);
  CHECK(std::abs(evolve_and_eval(s, kPi, 0.2)) < 1e-12);
  double prev = 2.0;
  for (double t : {0.05, 0.2, 0.8}) {
    const double mass = oracles::simpson([&s, t](double x) { return evolve_and_eval(s, x, t); },
                                         0.0, kPi, 4096);
    CHECK(mass < prev);
    CHECK(mass > 0.0);
    prev = mass;
  }
}
