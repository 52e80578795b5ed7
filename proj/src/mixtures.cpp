#include "quasiprob/mixtures.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "quasiprob/quadrature.hpp"

namespace quasiprob {
namespace {

constexpr double kPi = std::numbers::pi;

double norm_pdf(double x, double sd) {
  return std::exp(-0.5 * x * x / (sd * sd)) / (sd * std::sqrt(2.0 * kPi));
}

std::vector<SmnFamily> build_catalog() {
  std::vector<SmnFamily> cat;

  cat.push_back({"normal",
                 SignedMixingMeasure::atoms({{1.0, 1.0}}, true),
                 [](double x) { return norm_pdf(x, 1.0); },
                 [](double t) { return std::exp(-0.5 * t * t); }});

  cat.push_back({"laplace",
                 SignedMixingMeasure::density(
                     [](double v) { return 0.5 * std::exp(-0.5 * v); }, true),
                 [](double x) { return 0.5 * std::exp(-std::abs(x)); },
                 [](double t) { return 1.0 / (1.0 + t * t); }});

  // Inverse-chi-square with one degree of freedom.
  cat.push_back({"cauchy",
                 SignedMixingMeasure::density(
                     [](double v) {
                       return std::pow(2.0 * kPi, -0.5) * std::pow(v, -1.5) *
                              std::exp(-0.5 / v);
                     },
                     true),
                 [](double x) { return 1.0 / (kPi * (1.0 + x * x)); },
                 [](double t) { return std::exp(-std::abs(t)); }});

  cat.push_back({"quartic", quartic_mixing(),
                 [](double x) {
                   const double x2 = x * x;
                   return (4.0 / kPi) / (4.0 + x2 * x2);
                 },
                 [](double t) {
                   const double a = std::abs(t);
                   return std::exp(-a) * (std::cos(a) + std::sin(a));
                 }});

  cat.push_back({"normal_mix",
                 SignedMixingMeasure::atoms({{1.0, 0.5}, {4.0, 0.5}}, true),
                 [](double x) { return 0.5 * norm_pdf(x, 1.0) + 0.5 * norm_pdf(x, 2.0); },
                 [](double t) {
                   return 0.5 * std::exp(-0.5 * t * t) + 0.5 * std::exp(-2.0 * t * t);
                 }});

  return cat;
}

}  // namespace

std::vector<SmnFamily> smn_catalog() { return build_catalog(); }

const SmnFamily& smn_family(const std::string& name) {
  static const std::vector<SmnFamily> cat = build_catalog();
  for (const SmnFamily& f : cat)
    if (f.name == name) return f;
  throw std::invalid_argument("smn_family: unknown family '" + name + "'");
}

double smn_density(const SignedMixingMeasure& F, double x) {
  const double x2 = x * x;
  return F.integrate_kernel(
      [x2](double v) { return std::exp(-0.5 * x2 / v) / std::sqrt(2.0 * kPi * v); }, 1e-11);
}

double smn_charfn(const SignedMixingMeasure& F, double t) {
  const double t2 = t * t;
  return F.integrate_kernel([t2](double v) { return std::exp(-0.5 * v * t2); }, 1e-11);
}

SignedMixingMeasure quartic_mixing() {
  const double amp = std::sqrt(2.0 / kPi);
  return SignedMixingMeasure::reciprocal_density(
      [amp](double u) { return amp * std::sin(u) / std::sqrt(u); }, kPi, true);
}

double linnik_charfn(double alpha, double t) {
  if (alpha <= 0.0 || alpha > 4.0)
    throw std::domain_error("linnik_charfn: alpha must be in (0, 4]");
  return 1.0 / (1.0 + std::pow(std::abs(t), alpha));
}

LinnikResult linnik_density(double alpha, double x) {
  if (alpha <= 0.0 || alpha > 4.0)
    throw std::domain_error("linnik_density: alpha must be in (0, 4]");
  LinnikResult out;
  out.extraordinary = alpha > 2.0;
  const double ax = std::abs(x);
  auto phi = [alpha](double t) { return 1.0 / (1.0 + std::pow(t, alpha)); };
  if (ax < 1e-12) {
    if (alpha <= 1.0) {
      // The inversion integral diverges (log rate at alpha = 1); report the
      // integral truncated at a fixed large frequency and flag it.
      const double T = 1e6;
      QuadResult r = integrate_adaptive(phi, 0.0, T, 1e-9);
      out.value = r.value / kPi;
      out.slowly_convergent = true;
      return out;
    }
    const double T = 1e4;
    QuadResult r = integrate_adaptive(phi, 0.0, T, 1e-11);
    // int_T^inf dt/(1+t^alpha) expanded in powers of t^{-alpha}.
    double tail = 0.0, sign = 1.0;
    for (int j = 1; j <= 6; ++j) {
      tail += sign * std::pow(T, 1.0 - j * alpha) / (j * alpha - 1.0);
      sign = -sign;
    }
    out.value = (r.value + tail) / kPi;
    return out;
  }
  const double t0 = 0.5 * kPi / ax;
  QuadResult head =
      integrate_adaptive([&](double t) { return std::cos(t * ax) * phi(t); }, 0.0, t0, 1e-11);
  QuadResult osc = oscillatory_integral(
      [&](double u) {
        const double t = t0 + u;
        return std::cos(t * ax) * phi(t);
      },
      kPi / ax, 1e-11);
  if (!osc.converged) throw std::domain_error("linnik_density: inversion integral diverged");
  out.value = (head.value + osc.value) / kPi;
  return out;
}

GridDensity linnik_grid(double alpha, SymmetricGrid g) {
  GridDensity d;
  d.x.resize(g.points);
  d.values.resize(g.points);
  const double h = 2.0 * g.extent / (g.points - 1);
  const int mid = (g.points - 1) / 2;
  for (int i = mid; i < g.points; ++i) {
    d.x[i] = (i - mid) * h;
    d.x[g.points - 1 - i] = -d.x[i];
    const double v = linnik_density(alpha, d.x[i]).value;
    d.values[i] = v;
    d.values[g.points - 1 - i] = v;
  }
  d.x[mid] = 0.0;
  d.normalized = false;
  return d;
}

LinnikMassReport linnik_mass_check(double alpha, double cutoff) {
  if (alpha <= 0.0 || alpha > 2.0)
    throw std::domain_error("linnik_mass_check: alpha must be in (0, 2]");
  LinnikMassReport rep;
  rep.cutoff = cutoff;
  const double X = cutoff;
  auto body_fn = [alpha, X](double t) {
    return std::sin(t * X) / (t * (1.0 + std::pow(t, alpha)));
  };
  const double t1 = kPi / X;
  QuadResult head = integrate_adaptive(body_fn, 1e-300, t1, 1e-11);
  QuadResult osc =
      oscillatory_integral([&](double u) { return body_fn(t1 + u); }, kPi / X, 1e-11);
  if (!osc.converged) throw std::domain_error("linnik_mass_check: quadrature failure");
  rep.body = (head.value + osc.value) * 2.0 / kPi;
  // P(|X| > cutoff) from the asymptotic expansion of the charfn inversion;
  // the series is asymptotic, so stop at its smallest term.
  double prev = std::numeric_limits<double>::infinity();
  double first = 0.0;
  double sign = 1.0;
  for (int k = 1; k <= 40; ++k) {
    const double term = sign * std::sin(0.5 * k * kPi * alpha) *
                        std::exp(std::lgamma(1.0 + k * alpha) - k * alpha * std::log(X)) /
                        (k * alpha);
    sign = -sign;
    if (first == 0.0) first = std::abs(term);
    // sin() kills every (2/alpha)-th term up to rounding; skip those entirely
    // so they neither contribute noise nor masquerade as the smallest term.
    if (std::abs(term) <= 1e-13 * first) continue;
    if (std::abs(term) > prev) break;
    rep.tail += term * 2.0 / kPi;
    prev = std::abs(term);
  }
  rep.total = rep.body + rep.tail;
  return rep;
}

double stable_positive_density(double rho, double x) {
  if (rho <= 0.0 || rho >= 1.0)
    throw std::domain_error("stable_positive_density: rho must be in (0, 1)");
  if (x <= 0.0) return 0.0;
  if (rho == 0.5) {
    return 0.5 / std::sqrt(kPi) * std::pow(x, -1.5) * std::exp(-0.25 / x);
  }
  const double r = rho / (1.0 - rho);
  const double xr = std::pow(x, -r);
  auto a = [rho, r](double u) {
    const double su = std::sin(u);
    return std::pow(std::sin(rho * u) / su, r) * std::sin((1.0 - rho) * u) / su;
  };
  // Integrate (xr a) e^{-xr a}, bounded by 1/e, so the tolerance is absolute
  // regardless of how extreme x is.
  QuadResult q = integrate_adaptive(
      [&](double u) {
        const double au = a(u);
        const double z = xr * au;
        return z * std::exp(-z);
      },
      1e-12, kPi - 1e-12, 1e-13);
  return r * std::pow(x, -1.0 / (1.0 - rho)) * q.value / (kPi * xr);
}

SignedMixingMeasure exp_power_mixing(double alpha) {
  if (alpha <= 0.0 || alpha > 2.0)
    throw std::domain_error("exp_power_mixing: alpha must be in (0, 2]");
  if (alpha == 2.0) return SignedMixingMeasure::atoms({{2.0, 1.0}}, true);
  const double rho = 0.5 * alpha;
  return SignedMixingMeasure::density(
      [rho](double s) { return 0.5 * stable_positive_density(rho, 0.5 * s); }, true);
}

namespace {

// Determinant and inverse for n <= 3, row-major.
double det_small(int n, const std::vector<double>& C) {
  if (n == 1) return C[0];
  if (n == 2) return C[0] * C[3] - C[1] * C[2];
  return C[0] * (C[4] * C[8] - C[5] * C[7]) - C[1] * (C[3] * C[8] - C[5] * C[6]) +
         C[2] * (C[3] * C[7] - C[4] * C[6]);
}

std::vector<double> inv_small(int n, const std::vector<double>& C, double det) {
  std::vector<double> inv(static_cast<std::size_t>(n) * n);
  if (n == 1) {
    inv[0] = 1.0 / det;
  } else if (n == 2) {
    inv[0] = C[3] / det;
    inv[1] = -C[1] / det;
    inv[2] = -C[2] / det;
    inv[3] = C[0] / det;
  } else {
    inv[0] = (C[4] * C[8] - C[5] * C[7]) / det;
    inv[1] = (C[2] * C[7] - C[1] * C[8]) / det;
    inv[2] = (C[1] * C[5] - C[2] * C[4]) / det;
    inv[3] = (C[5] * C[6] - C[3] * C[8]) / det;
    inv[4] = (C[0] * C[8] - C[2] * C[6]) / det;
    inv[5] = (C[2] * C[3] - C[0] * C[5]) / det;
    inv[6] = (C[3] * C[7] - C[4] * C[6]) / det;
    inv[7] = (C[1] * C[6] - C[0] * C[7]) / det;
    inv[8] = (C[0] * C[4] - C[1] * C[3]) / det;
  }
  return inv;
}

}  // namespace

MvQuarticReport multivariate_quartic_check(int n, const std::vector<double>& C,
                                           const std::vector<double>& x) {
  if (n < 1 || n > 3) throw std::invalid_argument("multivariate_quartic_check: n must be 1..3");
  if (C.size() != static_cast<std::size_t>(n) * n || x.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("multivariate_quartic_check: shape mismatch");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(C[i * n + j] - C[j * n + i]) > 1e-12)
        throw std::invalid_argument("multivariate_quartic_check: C not symmetric");
  const double det = det_small(n, C);
  if (det <= 0.0)
    throw std::invalid_argument("multivariate_quartic_check: C not positive definite");
  const std::vector<double> Cinv = inv_small(n, C, det);
  double q = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) q += x[i] * Cinv[i * n + j] * x[j];

  MvQuarticReport rep;
  rep.q = q;
  const double pref = std::pow(2.0 * kPi, -0.5 * n) / std::sqrt(det);
  // N(x; 0, t^{-1} C) t^{-n/2} sin(t/2) = pref e^{-t q / 2} sin(t/2); zeros of
  // the sine factor at t = 2 pi k.
  QuadResult osc = oscillatory_integral(
      [q, pref](double t) { return pref * std::exp(-0.5 * q * t) * std::sin(0.5 * t); },
      2.0 * kPi, 1e-11);
  if (!osc.converged)
    throw std::domain_error("multivariate_quartic_check: quadrature failure");
  rep.lhs = osc.value;
  rep.rhs = 1.0 / (1.0 + q * q);
  rep.kappa = rep.lhs / rep.rhs;
  return rep;
}

namespace {

struct MomentScan {
  double second_moment = 0.0;
  bool divergent = false;
  bool signed_density = false;
};

MomentScan scan_moments(const std::function<double(double)>& p, double base_extent) {
  MomentScan out;
  double prev = -1.0;
  for (int round = 0; round < 3; ++round) {
    const double E = base_extent * (1 << round);
    QuadResult m = integrate_adaptive([&](double t) { return t * t * p(t); }, -E, E, 1e-10);
    if (round > 0 && m.value - prev > 1e-7 * (1.0 + std::abs(prev))) out.divergent = true;
    prev = m.value;
    out.second_moment = m.value;
  }
  const int probes = 801;
  const double E = base_extent;
  for (int i = 0; i < probes; ++i) {
    const double t = -E + 2.0 * E * i / (probes - 1);
    if (p(t) < -1e-9) {
      out.signed_density = true;
      break;
    }
  }
  return out;
}

}  // namespace

GneitingResult gneiting_product(const SmnFamily& family) {
  std::function<double(double)> p = family.density_closed_form;
  if (!p) {
    SignedMixingMeasure F = family.mixing;
    p = [F](double x) { return smn_density(F, x); };
  }
  std::function<double(double)> phi = family.charfn_closed_form;
  if (!phi) {
    SignedMixingMeasure F = family.mixing;
    phi = [F](double t) { return smn_charfn(F, t); };
  }
  const double p0 = p(0.0);
  if (p0 <= 0.0) throw std::domain_error("gneiting_product: p(0) must be positive");
  auto dual = [phi, p0](double t) { return phi(t) / (2.0 * kPi * p0); };

  GneitingResult res;
  MomentScan mp = scan_moments(p, 12.0);
  MomentScan md = scan_moments(dual, 12.0);
  if (mp.signed_density || md.signed_density) {
    res.applicable = false;
    return res;
  }
  if (mp.divergent || md.divergent) {
    res.infinite = true;
    res.product = std::numeric_limits<double>::infinity();
    res.sigma_p = mp.divergent ? std::numeric_limits<double>::infinity()
                               : std::sqrt(mp.second_moment);
    res.sigma_dual = md.divergent ? std::numeric_limits<double>::infinity()
                                  : std::sqrt(md.second_moment);
    return res;
  }
  res.sigma_p = std::sqrt(mp.second_moment);
  res.sigma_dual = std::sqrt(md.second_moment);
  res.product = res.sigma_p * res.sigma_dual;
  return res;
}

}  // namespace quasiprob
