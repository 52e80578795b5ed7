#pragma once

#include <functional>

#include "quasiprob/types.hpp"

namespace quasiprob {

// Marginal over states by the law of total probability; signed conditionals
// are allowed, the marginal should still be an ordinary distribution.
SignedPmf total_probability(const ConditionalTable& tbl);

// Feynman's two-condition, three-state example with base rates (0.7, 0.3).
ConditionalTable feynman_table();

// Signed mixture of exponential-family components. Each component is a
// normalized Gamma(shape, rate) density; a fresh prior uses shape = 1
// (pure exponentials e^{-s z} scaled), conjugate updates raise the shape.
struct PriorComponent {
  double shape = 1.0;
  double rate = 1.0;  // s > 0
  double weight = 1.0;
};

class SignedMixturePrior {
 public:
  explicit SignedMixturePrior(std::vector<PriorComponent> components);

  const std::vector<PriorComponent>& components() const { return components_; }
  double density(double z) const;
  double weight_sum() const;
  // Minimum of the mixture density over a fixed probe grid on (0, z_max].
  double min_on_grid(double z_max = 20.0, int points = 2049) const;
  bool is_ordinary(double tol = 1e-10) const { return min_on_grid() >= -tol; }

 private:
  std::vector<PriorComponent> components_;
};

enum class Likelihood { Exponential, Poisson, Normal };

struct PosteriorResult {
  SignedMixturePrior posterior;
  double marginal = 0.0;              // m(y) = sum_i w_i c_i(y)
  std::vector<double> evidence;       // c_i(y) per component
};

// Conjugate signed-mixture Bayes update. Likelihoods:
//   Exponential: f(y|z) = z e^{-z y},           y >= 0
//   Poisson:     f(y|z) = z^y e^{-z} / y!,       y integer >= 0
//   Normal:      f(y|z) = N(y; z, sigma^2)
// Per-component evidence c_i(y) = int f(y|z) dGamma_i(z) in closed form
// (Exponential, Poisson) or by the erfc formula (Normal, shape 1 only).
PosteriorResult signed_posterior(const SignedMixturePrior& prior, Likelihood lik, double y,
                                 double sigma = 1.0);

// Truncated sine series on [0, pi] evolving under the heat equation with
// absorbing ends: P(x, t) = sum p_n sin(n x) e^{-n^2 t}.
struct SineSeriesSolution {
  std::vector<double> coeffs;  // p_1 .. p_N
};

// p_n = (2/pi) int_0^pi f(x) sin(n x) dx. Breakpoints (jump discontinuities of
// f) may be listed so each smooth piece is integrated separately.
SineSeriesSolution sine_coeffs(const std::function<double(double)>& f, int N,
                               const std::vector<double>& breakpoints = {});

double evolve_and_eval(const SineSeriesSolution& sol, double x, double t);

// Normalized indicator initial condition (2/pi) 1_{[pi/4, 3pi/4]}; its sine
// coefficients have mixed signs.
double bump_initial(double x);
SineSeriesSolution bump_solution(int N);
// Exact coefficients p_n = (4/(n pi^2)) (cos(n pi/4) - cos(3 n pi/4)).
double bump_coeff_exact(int n);

}  // namespace quasiprob
