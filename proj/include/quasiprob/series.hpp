#pragma once

#include <string>

#include "quasiprob/types.hpp"

namespace quasiprob {

// Cauchy product truncated at the common order.
PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b);

struct ReciprocalResult {
  PowerSeries series;
  // Raised when the reciprocal coefficients grow, i.e. the formal inverse is
  // not an l1 sequence and truncation would fake convergence.
  bool divergence_warning = false;
};
// Multiplicative inverse up to truncation: series_mul(a, b) = (1, 0, ..., 0).
// Requires c_0 != 0.
ReciprocalResult series_reciprocal(const PowerSeries& a);

// Series square root by Newton iteration, b <- (b + a/b)/2. Requires c_0 > 0.
PowerSeries series_sqrt(const PowerSeries& a);

// binom(1/2, n) via the Catalan-number formula
//   binom(1/2,n) = (-1)^(n-1) * 2 C_(n-1) / 4^n,  C_n = binom(2n,n)/(n+1).
double binom_half(int n);
double catalan(int n);

// Half-coin pgf coefficients: 2^(-1/2) * binom(1/2, n), n = 0..n_max.
PowerSeries halfcoin_coeffs(int n_max);

// (q + p s)^n with q = 1 - p; p may be negative (extraordinary Binomial).
PowerSeries binomial_pgf(int n, double p, int order = -1);

enum class PgConvention { Paper, HalfArgument };

// Polya-Gamma PG(b,0) Laplace transform:
//   Paper:        cosh^{-b}(sqrt(t))
//   HalfArgument: cosh^{-b}(sqrt(t/2))
double pg_laplace(double b, double t, PgConvention convention);

struct BnMixingResult {
  double value = 0.0;
  double tail_estimate = 0.0;
  int terms_used = 0;
  bool converged = false;
};
// Barndorff-Nielsen mixing density
//   f(u) = sum_k binom(-2 delta, k) (delta + k) / B(delta, delta) * exp(-(delta+k)^2 u / 2)
// with binom(-2 delta, k) = (-1)^k binom(2 delta + k - 1, k). Truncated at K or
// when two successive terms fall below 1e-14.
BnMixingResult bn_mixing_density(double delta, double u, int K);

struct FactorizationReport {
  double max_residual = 0.0;  // max_k |(f*g - h)_k|
  bool g_ordinary = false;
  bool h_ordinary = false;
};
FactorizationReport factorization_check(const PowerSeries& f, const PowerSeries& g,
                                        const PowerSeries& h);

}  // namespace quasiprob
