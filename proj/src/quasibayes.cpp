#include "quasiprob/quasibayes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "quasiprob/quadrature.hpp"

namespace quasiprob {
namespace {

constexpr double kPi = std::numbers::pi;

double gamma_density(const PriorComponent& c, double z) {
  if (z <= 0.0) return 0.0;
  return std::exp(c.shape * std::log(c.rate) + (c.shape - 1.0) * std::log(z) - c.rate * z -
                  std::lgamma(c.shape));
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

}  // namespace

SignedPmf total_probability(const ConditionalTable& tbl) {
  tbl.validate();
  SignedPmf out;
  for (std::size_t i = 0; i < tbl.states.size(); ++i) {
    double p = 0.0;
    for (std::size_t j = 0; j < tbl.conditions.size(); ++j)
      p += tbl.entries[i][j] * tbl.base[j];
    out.atoms.emplace_back(static_cast<int>(i), p);
  }
  return out;
}

ConditionalTable feynman_table() {
  ConditionalTable t;
  t.states = {"1", "2", "3"};
  t.conditions = {"A", "B"};
  t.entries = {{0.3, -0.4}, {0.6, 1.2}, {0.1, 0.2}};
  t.base = {0.7, 0.3};
  return t;
}

SignedMixturePrior::SignedMixturePrior(std::vector<PriorComponent> components)
    : components_(std::move(components)) {
  if (components_.empty())
    throw std::invalid_argument("SignedMixturePrior: no components");
  double wsum = 0.0;
  for (const PriorComponent& c : components_) {
    if (c.rate <= 0.0 || c.shape <= 0.0)
      throw std::invalid_argument("SignedMixturePrior: shape and rate must be > 0");
    wsum += c.weight;
  }
  if (std::abs(wsum - 1.0) > 1e-8)
    throw std::invalid_argument("SignedMixturePrior: weights must sum to 1");
}

double SignedMixturePrior::density(double z) const {
  double p = 0.0;
  for (const PriorComponent& c : components_) p += c.weight * gamma_density(c, z);
  return p;
}

double SignedMixturePrior::weight_sum() const {
  double s = 0.0;
  for (const PriorComponent& c : components_) s += c.weight;
  return s;
}

double SignedMixturePrior::min_on_grid(double z_max, int points) const {
  double lo = 0.0;
  for (int i = 1; i <= points; ++i) {
    const double z = z_max * i / points;
    lo = std::min(lo, density(z));
  }
  return lo;
}

PosteriorResult signed_posterior(const SignedMixturePrior& prior, Likelihood lik, double y,
                                 double sigma) {
  const auto& comps = prior.components();
  std::vector<double> evidence(comps.size());
  std::vector<PriorComponent> post(comps.size());
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const PriorComponent& c = comps[i];
    switch (lik) {
      case Likelihood::Exponential: {
        if (y < 0.0) throw std::domain_error("signed_posterior: exponential data must be >= 0");
        evidence[i] = c.shape * std::exp(c.shape * std::log(c.rate) -
                                         (c.shape + 1.0) * std::log(c.rate + y));
        post[i] = {c.shape + 1.0, c.rate + y, 0.0};
        break;
      }
      case Likelihood::Poisson: {
        const double k = std::round(y);
        if (k < 0.0 || std::abs(k - y) > 1e-9)
          throw std::domain_error("signed_posterior: Poisson data must be a nonnegative integer");
        evidence[i] = std::exp(c.shape * std::log(c.rate) + std::lgamma(c.shape + k) -
                               std::lgamma(c.shape) - std::lgamma(k + 1.0) -
                               (c.shape + k) * std::log(c.rate + 1.0));
        post[i] = {c.shape + k, c.rate + 1.0, 0.0};
        break;
      }
      case Likelihood::Normal: {
        if (sigma <= 0.0) throw std::domain_error("signed_posterior: sigma must be > 0");
        if (std::abs(c.shape - 1.0) < 1e-12) {
          const double s = c.rate;
          evidence[i] = s * std::exp(0.5 * s * s * sigma * sigma - s * y) *
                        normal_cdf((y - s * sigma * sigma) / sigma);
        } else {
          const PriorComponent cc = c;
          QuadResult r = integrate_half_line(
              [&](double z) {
                const double d = (y - z) / sigma;
                return gamma_density(cc, z) * std::exp(-0.5 * d * d) /
                       (sigma * std::sqrt(2.0 * kPi));
              },
              1e-12);
          evidence[i] = r.value;
        }
        // The z-kernel is no longer Gamma; only the mixing weights update.
        post[i] = {c.shape, c.rate, 0.0};
        break;
      }
    }
  }
  double marginal = 0.0;
  for (std::size_t i = 0; i < comps.size(); ++i) marginal += comps[i].weight * evidence[i];
  if (marginal <= 0.0)
    throw std::domain_error(
        "signed_posterior: nonpositive marginal; prior is not valid for this observation");
  for (std::size_t i = 0; i < comps.size(); ++i)
    post[i].weight = comps[i].weight * evidence[i] / marginal;
  PosteriorResult res{SignedMixturePrior(std::move(post)), marginal, std::move(evidence)};
  return res;
}

SineSeriesSolution sine_coeffs(const std::function<double(double)>& f, int N,
                               const std::vector<double>& breakpoints) {
  if (N < 1) throw std::invalid_argument("sine_coeffs: N must be >= 1");
  std::vector<double> edges{0.0};
  for (double b : breakpoints)
    if (b > 0.0 && b < kPi) edges.push_back(b);
  edges.push_back(kPi);
  std::sort(edges.begin(), edges.end());
  SineSeriesSolution sol;
  sol.coeffs.resize(N);
  for (int n = 1; n <= N; ++n) {
    double acc = 0.0;
    for (std::size_t j = 0; j + 1 < edges.size(); ++j) {
      QuadResult r = integrate_adaptive(
          [&](double x) { return f(x) * std::sin(n * x); }, edges[j], edges[j + 1], 1e-12);
      acc += r.value;
    }
    sol.coeffs[n - 1] = 2.0 / kPi * acc;
  }
  return sol;
}

double evolve_and_eval(const SineSeriesSolution& sol, double x, double t) {
  if (t < 0.0) throw std::domain_error("evolve_and_eval: t must be >= 0");
  double acc = 0.0;
  for (int n = static_cast<int>(sol.coeffs.size()); n >= 1; --n)
    acc += sol.coeffs[n - 1] * std::sin(n * x) * std::exp(-static_cast<double>(n) * n * t);
  return acc;
}

double bump_initial(double x) {
  // Midpoint value at the jumps, matching what the sine series converges to
  // (and keeping grid-based solvers second-order accurate).
  if (std::abs(x - 0.25 * kPi) < 1e-12 || std::abs(x - 0.75 * kPi) < 1e-12) return 1.0 / kPi;
  return (x > 0.25 * kPi && x < 0.75 * kPi) ? 2.0 / kPi : 0.0;
}

double bump_coeff_exact(int n) {
  return 4.0 / (n * kPi * kPi) * (std::cos(n * kPi / 4.0) - std::cos(3.0 * n * kPi / 4.0));
}

SineSeriesSolution bump_solution(int N) {
  SineSeriesSolution sol;
  sol.coeffs.resize(N);
  for (int n = 1; n <= N; ++n) sol.coeffs[n - 1] = bump_coeff_exact(n);
  return sol;
}

}  // namespace quasiprob
