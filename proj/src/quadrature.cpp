#include "quasiprob/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace quasiprob {
namespace {

// Gauss-Kronrod 7-15 nodes/weights on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
  double value;
  double err;
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(c);
  double resk = kWgk[7] * fc;
  double resg = kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kXgk[i];
    const double fsum = f(c - dx) + f(c + dx);
    resk += kWgk[i] * fsum;
    if (i % 2 == 1) resg += kWg[i / 2] * fsum;
  }
  const double diff = std::abs(resk - resg) * half;
  return {resk * half, std::pow(200.0 * diff, 1.5)};
}

void adapt(const std::function<double(double)>& f, double a, double b, double tol, int depth,
           int max_depth, QuadResult* out) {
  Panel p = gk15(f, a, b);
  if (!std::isfinite(p.value)) throw std::domain_error("integrate_adaptive: non-finite integrand");
  if (p.err <= tol || depth >= max_depth) {
    out->value += p.value;
    out->abs_err += p.err;
    out->panels += 1;
    if (depth >= max_depth && p.err > tol) out->converged = false;
    return;
  }
  const double m = 0.5 * (a + b);
  adapt(f, a, m, 0.5 * tol, depth + 1, max_depth, out);
  adapt(f, m, b, 0.5 * tol, depth + 1, max_depth, out);
}

}  // namespace

QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double abs_tol, int max_depth) {
  QuadResult out;
  out.converged = true;
  if (a == b) return out;
  // Pre-split so a single panel whose nodes all miss the mass of a localized
  // integrand cannot be accepted as zero outright.
  const int pre = 8;
  const double step = (b - a) / pre;
  for (int i = 0; i < pre; ++i)
    adapt(f, a + i * step, a + (i + 1) * step, abs_tol / pre, 0, max_depth, &out);
  return out;
}

QuadResult integrate_half_line(const std::function<double(double)>& f, double abs_tol) {
  // Head on (0, 1] plus tail via v = 1/u^2, which keeps algebraic tails down
  // to v^{-3/2 - eps} smooth instead of leaving an endpoint singularity.
  auto g = [&f](double u) { return f(u) + 2.0 * f(1.0 / (u * u)) / (u * u * u); };
  const double eps = 1e-14;
  return integrate_adaptive(g, eps, 1.0, abs_tol);
}

double euler_accelerate(const std::vector<double>& terms, double* abs_err) {
  // Repeated averaging of the partial-sum sequence. For an alternating series
  // with smoothly decaying terms each averaging pass gains roughly one bit.
  std::vector<double> s(terms.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    acc += terms[i];
    s[i] = acc;
  }
  double best = s.back();
  double prev_best = best;
  while (s.size() > 1) {
    for (std::size_t i = 0; i + 1 < s.size(); ++i) s[i] = 0.5 * (s[i] + s[i + 1]);
    s.pop_back();
    prev_best = best;
    best = s.back();
  }
  if (abs_err) *abs_err = std::abs(best - prev_best);
  return best;
}

QuadResult oscillatory_integral(const std::function<double(double)>& f, double zero_spacing,
                                double abs_tol, int max_panels) {
  if (zero_spacing <= 0.0) throw std::invalid_argument("oscillatory_integral: zero_spacing <= 0");
  QuadResult out;
  std::vector<double> panels;
  panels.reserve(64);
  double panel_err = 0.0;
  int tiny_streak = 0;
  for (int k = 0; k < max_panels; ++k) {
    const double a = k * zero_spacing;
    const double b = (k + 1) * zero_spacing;
    QuadResult p = integrate_adaptive(f, a, b, 0.05 * abs_tol, 36);
    panels.push_back(p.value);
    panel_err += p.abs_err;
    out.panels += 1;
    if (std::abs(p.value) < 0.01 * abs_tol) {
      if (++tiny_streak >= 2) {
        // Integrand has effectively died out; plain summation suffices.
        double s = 0.0;
        for (double v : panels) s += v;
        out.value = s;
        out.abs_err = panel_err + std::abs(p.value);
        out.converged = true;
        return out;
      }
    } else {
      tiny_streak = 0;
    }
    if (panels.size() >= 6) {
      double est_err = 0.0;
      const double s = euler_accelerate(panels, &est_err);
      if (est_err + panel_err < abs_tol) {
        out.value = s;
        out.abs_err = est_err + panel_err;
        out.converged = true;
        return out;
      }
    }
  }
  double est_err = 0.0;
  out.value = euler_accelerate(panels, &est_err);
  out.abs_err = est_err + panel_err;
  out.converged = false;
  return out;
}

double trapezoid_uniform(const std::vector<double>& values, double h) {
  if (values.size() < 2) return 0.0;
  double s = 0.5 * (values.front() + values.back());
  for (std::size_t i = 1; i + 1 < values.size(); ++i) s += values[i];
  return s * h;
}

}  // namespace quasiprob
