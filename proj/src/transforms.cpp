#include "quasiprob/transforms.hpp"

#include <cmath>
#include <numbers>

#include "quasiprob/quadrature.hpp"

namespace quasiprob {
namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> make_symmetric_axis(const SymmetricGrid& g) {
  if (g.points < 3 || g.points % 2 == 0)
    throw std::invalid_argument("SymmetricGrid: points must be odd and >= 3");
  if (g.extent <= 0.0) throw std::invalid_argument("SymmetricGrid: extent must be > 0");
  std::vector<double> axis(g.points);
  const double h = 2.0 * g.extent / (g.points - 1);
  const int mid = (g.points - 1) / 2;
  for (int i = 0; i < g.points; ++i) axis[i] = (i - mid) * h;
  axis[mid] = 0.0;
  return axis;
}

bool is_even_symmetric(const std::vector<double>& v, double tol) {
  const std::size_t n = v.size();
  double scale = 0.0;
  for (double y : v) scale = std::max(scale, std::abs(y));
  for (std::size_t i = 0; i < n / 2; ++i)
    if (std::abs(v[i] - v[n - 1 - i]) > tol * std::max(1.0, scale)) return false;
  return true;
}

// One-sided 5-point derivative estimate at sample 0 of {f0 .. f4}. Fourth
// order, so the estimate degrades gracefully to ~0 for smooth even data where
// the true one-sided slope vanishes.
double edge_derivative(const double* f, double h) {
  return (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]) / (12.0 * h);
}

struct TailFit {
  enum class Kind { None, Rational, Power } kind = Kind::None;
  double c = 0.0;
  double a = 0.0;  // rational: c / (a + x^2)
  double k = 0.0;  // power: c * x^(-k)
  double cutoff = 0.0;

  double operator()(double x) const {
    switch (kind) {
      case Kind::Rational:
        return c / (a + x * x);
      case Kind::Power:
        return c * std::pow(x, -k);
      case Kind::None:
        return 0.0;
    }
    return 0.0;
  }
};

// Fit a decaying tail model to the outer part of the half-grid samples
// q_k = p(k h), k = 0..K. Rational-quadratic first (the generalized-Cauchy
// shape every dual in the catalog decays like), power law as fallback.
TailFit fit_tail(const std::vector<double>& q, double h) {
  const std::size_t K = q.size() - 1;
  const double X = K * h;
  auto sample = [&](double frac) { return q[static_cast<std::size_t>(frac * K)]; };
  auto xat = [&](double frac) { return static_cast<std::size_t>(frac * K) * h; };
  const double p1 = sample(0.5), p2 = sample(0.8), p3 = sample(0.65);
  const double x1 = xat(0.5), x2 = xat(0.8), x3 = xat(0.65);
  TailFit fit;
  fit.cutoff = X;
  if (p1 > 0.0 && p2 > 0.0 && p1 > p2) {
    const double a = (p2 * x2 * x2 - p1 * x1 * x1) / (p1 - p2);
    if (a > -0.5 * x3 * x3) {
      const double c = p1 * (a + x1 * x1);
      const double model = c / (a + x3 * x3);
      if (std::abs(model - p3) <= 1e-3 * std::abs(p3)) {
        fit.kind = TailFit::Kind::Rational;
        fit.c = c;
        fit.a = a;
        return fit;
      }
    }
    const double k = std::log(p1 / p2) / std::log(x2 / x1);
    if (k > 1.05) {
      const double c = p1 * std::pow(x1, k);
      const double model = c * std::pow(x3, -k);
      if (std::abs(model - p3) <= 1e-2 * std::abs(p3)) {
        fit.kind = TailFit::Kind::Power;
        fit.c = c;
        fit.k = k;
        return fit;
      }
    }
  }
  return fit;
}

// 2 * int_X^inf tailfn(x) cos(t x) dx.
double tail_cos_integral(const TailFit& fit, double t) {
  if (fit.kind == TailFit::Kind::None) return 0.0;
  const double X = fit.cutoff;
  const double at = std::abs(t);
  if (at < 1e-9) {
    if (fit.kind == TailFit::Kind::Rational) {
      if (fit.a > 0.0) {
        const double ra = std::sqrt(fit.a);
        return 2.0 * fit.c / ra * (0.5 * kPi - std::atan(X / ra));
      }
      // a <= 0 with X^2 + a > 0: partial fractions of 1/(x^2 - |a|).
      const double r = std::sqrt(-fit.a);
      return fit.c / r * std::log((X + r) / (X - r));
    }
    return 2.0 * fit.c * std::pow(X, 1.0 - fit.k) / (fit.k - 1.0);
  }
  // First zero of cos(t x) at or beyond X.
  const double x0 = (std::floor(at * X / kPi - 0.5) + 1.5) * kPi / at;
  auto amp = [&fit](double x) { return fit(x); };
  QuadResult head = integrate_adaptive([&](double x) { return amp(x) * std::cos(at * x); }, X,
                                       x0, 1e-12);
  QuadResult osc = oscillatory_integral(
      [&](double u) {
        const double x = x0 + u;
        return amp(x) * std::cos(at * x);
      },
      kPi / at, 1e-11);
  return 2.0 * (head.value + osc.value);
}

struct HalfGrid {
  std::vector<double> q;  // samples at x = 0, h, ..., Kh
  double h = 0.0;
};

HalfGrid half_of(const std::vector<double>& axis, const std::vector<double>& v) {
  const std::size_t n = axis.size();
  const std::size_t mid = n / 2;  // n odd
  HalfGrid hg;
  hg.h = axis[1] - axis[0];
  hg.q.assign(v.begin() + mid, v.end());
  // Symmetrize to keep the cosine path exactly even.
  for (std::size_t k = 0; k < hg.q.size(); ++k)
    hg.q[k] = 0.5 * (v[mid + k] + v[mid - k]);
  return hg;
}

HalfGrid half_of_odd(const std::vector<double>& axis, const std::vector<double>& v) {
  const std::size_t mid = axis.size() / 2;
  HalfGrid hg;
  hg.h = axis[1] - axis[0];
  hg.q.resize(axis.size() - mid);
  for (std::size_t k = 0; k < hg.q.size(); ++k)
    hg.q[k] = 0.5 * (v[mid + k] - v[mid - k]);
  return hg;
}

// Full-line integral int f(x) cos(t x) dx for even f given by half-grid
// samples: trapezoid + Euler-Maclaurin corrections at x = 0 (kink) and x = X.
class CosineTransform {
 public:
  CosineTransform(HalfGrid hg, TailFit tail) : hg_(std::move(hg)), tail_(tail) {
    const auto& q = hg_.q;
    const std::size_t K = q.size() - 1;
    dp0_ = edge_derivative(q.data(), hg_.h);
    double edge[5] = {q[K], q[K - 1], q[K - 2], q[K - 3], q[K - 4]};
    dpX_ = -edge_derivative(edge, hg_.h);
    pX_ = q[K];
    X_ = K * hg_.h;
  }

  double operator()(double t) const {
    const auto& q = hg_.q;
    const std::size_t K = q.size() - 1;
    const double h = hg_.h;
    const std::complex<double> rot(std::cos(t * h), std::sin(t * h));
    std::complex<double> w = rot;  // e^{i t x_k}, k = 1
    double s = q[0];
    for (std::size_t k = 1; k < K; ++k) {
      s += 2.0 * q[k] * w.real();
      w *= rot;
    }
    s += q[K] * w.real();
    double val = s * h;
    // Euler-Maclaurin: kink at 0 and endpoint at X.
    const double fX = dpX_ * std::cos(t * X_) - t * pX_ * std::sin(t * X_);
    val += (h * h / 6.0) * (dp0_ - fX);
    val += tail_cos_integral(tail_, t);
    return val;
  }

 private:
  HalfGrid hg_;
  TailFit tail_;
  double dp0_ = 0.0, dpX_ = 0.0, pX_ = 0.0, X_ = 0.0;
};

// Full-line integral int g(t) sin(x t) dt for odd g given by half-grid samples.
class SineTransform {
 public:
  SineTransform(HalfGrid hg) : hg_(std::move(hg)) {
    const auto& q = hg_.q;
    const std::size_t K = q.size() - 1;
    double edge[5] = {q[K], q[K - 1], q[K - 2], q[K - 3], q[K - 4]};
    dgX_ = -edge_derivative(edge, hg_.h);
    gX_ = q[K];
    X_ = K * hg_.h;
  }

  double operator()(double x) const {
    const auto& q = hg_.q;
    const std::size_t K = q.size() - 1;
    const double h = hg_.h;
    const std::complex<double> rot(std::cos(x * h), std::sin(x * h));
    std::complex<double> w = rot;
    double s = 0.0;
    for (std::size_t k = 1; k < K; ++k) {
      s += 2.0 * q[k] * w.imag();
      w *= rot;
    }
    s += q[K] * w.imag();
    double val = s * h;
    const double fX = dgX_ * std::sin(x * X_) + x * gX_ * std::cos(x * X_);
    val += (h * h / 6.0) * (0.0 - fX);
    return val;
  }

 private:
  HalfGrid hg_;
  double dgX_ = 0.0, gX_ = 0.0, X_ = 0.0;
};

TailFit resolve_tail(const HalfGrid& hg, TailModel mode, const char* who) {
  const double boundary = std::abs(hg.q.back());
  if (mode == TailModel::Auto) {
    TailFit fit = fit_tail(hg.q, hg.h);
    if (fit.kind != TailFit::Kind::None) return fit;
  }
  if (boundary > 1e-12)
    throw std::domain_error(std::string(who) + ": insufficient decay at grid boundary");
  return TailFit{};
}

}  // namespace

CharFn charfn(const GridDensity& d, SymmetricGrid out, TailModel tail) {
  d.validate();
  CharFn phi;
  phi.t = make_symmetric_axis(out);
  phi.values.resize(phi.t.size());
  if (!is_even_symmetric(d.values, 1e-12) ||
      std::abs(d.x.front() + d.x.back()) > 1e-9 * d.spacing()) {
    // General (non-even) grid: plain trapezoid with endpoint corrections.
    const double h = d.spacing();
    const std::size_t n = d.x.size();
    if (std::abs(d.values.front()) > 1e-12 || std::abs(d.values.back()) > 1e-12)
      throw std::domain_error("charfn: insufficient decay at grid boundary");
    for (std::size_t j = 0; j < phi.t.size(); ++j) {
      const double t = phi.t[j];
      const std::complex<double> rot(std::cos(t * h), std::sin(t * h));
      std::complex<double> w = std::polar(1.0, t * d.x.front());
      std::complex<double> s = 0.5 * d.values.front() * w;
      for (std::size_t k = 1; k + 1 < n; ++k) {
        w *= rot;
        s += d.values[k] * w;
      }
      w *= rot;
      s += 0.5 * d.values.back() * w;
      phi.values[j] = s * h;
    }
    return phi;
  }
  HalfGrid hg = half_of(d.x, d.values);
  TailFit fit = resolve_tail(hg, tail, "charfn");
  CosineTransform ct(std::move(hg), fit);
  const std::size_t mid = phi.t.size() / 2;
  for (std::size_t j = mid; j < phi.t.size(); ++j) {
    const double v = ct(phi.t[j]);
    phi.values[j] = v;
    phi.values[phi.t.size() - 1 - j] = v;  // Hermitian (real even) symmetry
  }
  return phi;
}

GridDensity invert_charfn(const CharFn& phi, SymmetricGrid out, TailModel tail) {
  if (phi.t.size() != phi.values.size() || phi.t.size() < 9)
    throw std::invalid_argument("invert_charfn: malformed CharFn");
  if (!phi.is_hermitian(1e-8))
    throw std::invalid_argument("invert_charfn: characteristic function is not Hermitian");
  std::vector<double> re(phi.values.size()), im(phi.values.size());
  for (std::size_t i = 0; i < phi.values.size(); ++i) {
    re[i] = phi.values[i].real();
    im[i] = phi.values[i].imag();
  }
  GridDensity p;
  p.x = make_symmetric_axis(out);
  p.values.assign(p.x.size(), 0.0);

  HalfGrid hre = half_of(phi.t, re);
  TailFit fit = resolve_tail(hre, tail, "invert_charfn");
  CosineTransform ct(std::move(hre), fit);

  double im_scale = 0.0;
  for (double v : im) im_scale = std::max(im_scale, std::abs(v));
  const bool has_odd = im_scale > 1e-13;
  SineTransform st(half_of_odd(phi.t, im));

  const std::size_t mid = p.x.size() / 2;
  const double inv2pi = 1.0 / (2.0 * kPi);
  for (std::size_t j = mid; j < p.x.size(); ++j) {
    const double x = p.x[j];
    const double even_part = ct(x) * inv2pi;
    if (has_odd) {
      const double odd_part = st(x) * inv2pi;
      p.values[j] = even_part + odd_part;
      p.values[p.x.size() - 1 - j] = even_part - odd_part;
    } else {
      p.values[j] = even_part;
      p.values[p.x.size() - 1 - j] = even_part;
    }
  }
  p.normalized = false;
  return p;
}

GridDensity dual_density(const GridDensity& p, SymmetricGrid out, TailModel tail) {
  p.validate();
  const double p0 = p.at_zero();
  if (p0 <= 0.0) throw std::domain_error("dual_density: p(0) must be positive");
  CharFn phi = charfn(p, out, tail);
  GridDensity dual;
  dual.x = phi.t;
  dual.values.resize(phi.values.size());
  const double scale = 1.0 / (2.0 * kPi * p0);
  for (std::size_t i = 0; i < phi.values.size(); ++i)
    dual.values[i] = phi.values[i].real() * scale;
  // Fourier inversion at 0 fixes unit mass on the full line; the flag only
  // holds when the output grid captures the tails.
  const double grid_mass = trapezoid_uniform(dual.values, dual.x[1] - dual.x[0]);
  dual.normalized = std::abs(grid_mass - 1.0) <= 100 * kMassTol;
  return dual;
}

SignedMixingMeasure dual_mixing(const SignedMixingMeasure& F, double p0) {
  if (p0 <= 0.0) throw std::domain_error("dual_mixing: p(0) must be positive");
  if (F.kind() == SignedMixingMeasure::Kind::Atoms)
    throw std::domain_error("dual_mixing: measure must have density form");
  const double scale = 1.0 / (std::sqrt(2.0 * kPi) * p0);
  auto fhat = [F, scale](double v) {
    return scale * std::pow(v, -1.5) * F.density_at(1.0 / v);
  };
  SignedMixingMeasure out = SignedMixingMeasure::density(fhat, false);
  const double mass = out.total_mass(1e-9);
  if (std::abs(mass - 1.0) <= 1e-6)
    out = SignedMixingMeasure::density(fhat, true);
  return out;
}

double laplace_transform(const SignedMixingMeasure& F, double x) {
  return F.integrate_kernel([x](double s) { return std::exp(-s * x); }, 1e-11);
}

CmReport completely_monotone_test(const std::function<double(double)>& f, double a, double b,
                                  int order) {
  if (!(a > 0.0 && b > a)) throw std::invalid_argument("completely_monotone_test: need 0 < a < b");
  if (order < 0 || order > 10)
    throw std::invalid_argument("completely_monotone_test: order must be in [0, 10]");
  const int n = 2048;
  const double h = (b - a) / n;
  std::vector<double> table(n + 1);
  double fmax = 0.0;
  for (int i = 0; i <= n; ++i) {
    table[i] = f(a + i * h);
    fmax = std::max(fmax, std::abs(table[i]));
  }
  const double tol = 1e-7 * fmax;
  CmReport rep;
  for (int j = 0; j <= order; ++j) {
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    for (int i = 0; i + j <= n; ++i) {
      const double v = sign * table[i];
      if (v < -tol) {
        rep.pass = false;
        rep.x_violation = a + i * h;
        rep.order_violation = j;
        rep.worst_value = v;
        return rep;
      }
    }
    // Next forward-difference column.
    for (int i = 0; i + j + 1 <= n; ++i) table[i] = table[i + 1] - table[i];
  }
  return rep;
}

LevyReport levy_half_identity_check(double t) {
  if (t <= 0.0) throw std::domain_error("levy_half_identity_check: t must be > 0");
  LevyReport rep;
  // Substitution u = w^2 turns the integral into a sine-weighted Gaussian one.
  QuadResult lhs = oscillatory_integral(
      [t](double w) { return 2.0 * w * std::exp(-t * w * w) * std::sin(w); }, kPi, 1e-11);
  if (!lhs.converged) throw std::domain_error("levy_half_identity_check: quadrature failure");
  rep.lhs = lhs.value / kPi;
  rep.rhs = levy_half_density(t);
  rep.diff = rep.lhs - rep.rhs;
  return rep;
}

double levy_half_density(double t) {
  if (t <= 0.0) return 0.0;
  return 0.5 / std::sqrt(kPi) * std::pow(t, -1.5) * std::exp(-0.25 / t);
}

}  // namespace quasiprob
