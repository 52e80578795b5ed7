#include "quasiprob/series.hpp"

#include <cmath>

namespace quasiprob {

PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b) {
  const int n = std::max(a.order(), b.order());
  std::vector<double> c(static_cast<size_t>(n) + 1, 0.0);
  for (int k = 0; k <= n; ++k) {
    double s = 0.0;
    for (int i = 0; i <= k; ++i) s += a[i] * b[k - i];
    c[k] = s;
  }
  return PowerSeries(std::move(c));
}

ReciprocalResult series_reciprocal(const PowerSeries& a) {
  if (a[0] == 0.0) throw std::domain_error("series_reciprocal: constant term is zero");
  const int n = a.order();
  std::vector<double> b(static_cast<size_t>(n) + 1, 0.0);
  b[0] = 1.0 / a[0];
  for (int k = 1; k <= n; ++k) {
    double s = 0.0;
    for (int i = 1; i <= k; ++i) s += a[i] * b[k - i];
    b[k] = -s / a[0];
  }
  ReciprocalResult r{PowerSeries(std::move(b)), false};
  // Coefficient growth between orders N/2 and N marks a divergent inverse.
  const int half = n / 2;
  if (n >= 2 && std::abs(r.series[half]) > 0.0 &&
      std::abs(r.series[n]) / std::abs(r.series[half]) > 1.0)
    r.divergence_warning = true;
  return r;
}

PowerSeries series_sqrt(const PowerSeries& a) {
  if (a[0] <= 0.0) throw std::domain_error("series_sqrt: constant term must be positive");
  const int n = a.order();
  std::vector<double> b(static_cast<size_t>(n) + 1, 0.0);
  b[0] = std::sqrt(a[0]);
  PowerSeries cur(std::move(b));
  // Newton iteration converges quadratically in the truncation order; a few
  // extra rounds polish the low-order coefficients in floating point.
  const int iters = 2 * static_cast<int>(std::ceil(std::log2(n + 2.0))) + 4;
  for (int it = 0; it < iters; ++it) {
    ReciprocalResult inv = series_reciprocal(cur);
    PowerSeries quot = series_mul(a, inv.series);
    std::vector<double> next(static_cast<size_t>(n) + 1, 0.0);
    for (int k = 0; k <= n; ++k) next[k] = 0.5 * (cur[k] + quot[k]);
    cur = PowerSeries(std::move(next));
  }
  return cur;
}

double catalan(int n) {
  if (n < 0) throw std::invalid_argument("catalan: n < 0");
  double c = 1.0;  // C_0
  for (int k = 0; k < n; ++k) c *= 2.0 * (2.0 * k + 1.0) / (k + 2.0);
  return c;
}

double binom_half(int n) {
  if (n < 0) throw std::invalid_argument("binom_half: n < 0");
  if (n == 0) return 1.0;
  // r_n = 2 C_(n-1) / 4^n, built by the ratio recurrence
  // r_(n+1)/r_n = (2n - 1) / (2 (n + 1)).
  double r = 0.5;  // r_1
  for (int k = 1; k < n; ++k) r *= (2.0 * k - 1.0) / (2.0 * (k + 1.0));
  const double sign = (n % 2 == 1) ? 1.0 : -1.0;  // (-1)^(n-1)
  return sign * r;
}

PowerSeries halfcoin_coeffs(int n_max) {
  if (n_max < 0) throw std::invalid_argument("halfcoin_coeffs: n_max < 0");
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  std::vector<double> c(static_cast<size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) c[n] = inv_sqrt2 * binom_half(n);
  return PowerSeries(std::move(c));
}

PowerSeries binomial_pgf(int n, double p, int order) {
  if (n < 1) throw std::invalid_argument("binomial_pgf: n must be >= 1");
  const double q = 1.0 - p;
  if (order < 0) order = n;
  std::vector<double> c(static_cast<size_t>(order) + 1, 0.0);
  double coef = 1.0;  // binom(n, k) q^(n-k) p^k, built incrementally
  for (int k = 0; k <= n && k <= order; ++k) {
    c[k] = coef * std::pow(q, n - k) * std::pow(p, k);
    coef *= static_cast<double>(n - k) / (k + 1.0);
  }
  return PowerSeries(std::move(c));
}

double pg_laplace(double b, double t, PgConvention convention) {
  if (t < 0.0) throw std::domain_error("pg_laplace: t must be >= 0");
  if (b <= 0.0) throw std::domain_error("pg_laplace: b must be > 0");
  const double arg = (convention == PgConvention::Paper) ? std::sqrt(t) : std::sqrt(0.5 * t);
  return std::pow(std::cosh(arg), -b);
}

BnMixingResult bn_mixing_density(double delta, double u, int K) {
  if (delta <= 0.0) throw std::domain_error("bn_mixing_density: delta must be > 0");
  if (u <= 0.0) throw std::domain_error("bn_mixing_density: u must be > 0");
  if (K < 1) throw std::invalid_argument("bn_mixing_density: K must be >= 1");
  const double log_beta = 2.0 * std::lgamma(delta) - std::lgamma(2.0 * delta);
  BnMixingResult out;
  double log_binom = 0.0;  // log binom(2 delta + k - 1, k), k = 0
  double prev_term = HUGE_VAL;
  for (int k = 0; k < K; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    const double dk = delta + k;
    const double term =
        sign * std::exp(log_binom - log_beta) * dk * std::exp(-0.5 * dk * dk * u);
    out.value += term;
    out.terms_used = k + 1;
    const double mag = std::abs(term);
    out.tail_estimate = mag;
    if (mag < 1e-14 && std::abs(prev_term) < 1e-14) {
      out.converged = true;
      break;
    }
    prev_term = term;
    log_binom += std::log((2.0 * delta + k) / (k + 1.0));
  }
  if (!out.converged && out.tail_estimate < 1e-12) out.converged = true;
  return out;
}

FactorizationReport factorization_check(const PowerSeries& f, const PowerSeries& g,
                                        const PowerSeries& h) {
  const PowerSeries fg = series_mul(f, g);
  FactorizationReport rep;
  const int n = std::max(fg.order(), h.order());
  for (int k = 0; k <= n; ++k) rep.max_residual = std::max(rep.max_residual, std::abs(fg[k] - h[k]));
  rep.g_ordinary = g.to_pmf().is_ordinary();
  rep.h_ordinary = h.to_pmf().is_ordinary();
  return rep;
}

}  // namespace quasiprob
