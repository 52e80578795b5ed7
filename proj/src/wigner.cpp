#include "quasiprob/wigner.hpp"

#include <cmath>
#include <numbers>

#include "quasiprob/quadrature.hpp"

namespace quasiprob {
namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> axis_of(const SymmetricGrid& g) {
  if (g.points < 3 || g.points % 2 == 0)
    throw std::invalid_argument("wigner: grid points must be odd and >= 3");
  std::vector<double> axis(g.points);
  const double h = 2.0 * g.extent / (g.points - 1);
  const int mid = (g.points - 1) / 2;
  for (int i = 0; i < g.points; ++i) axis[i] = (i - mid) * h;
  axis[mid] = 0.0;
  return axis;
}

double trapezoid(const std::vector<double>& v, double h) { return trapezoid_uniform(v, h); }

}  // namespace

double WaveFunction::norm() const {
  std::vector<double> dens(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) dens[i] = std::norm(psi[i]);
  return trapezoid(dens, x[1] - x[0]);
}

WaveFunction make_state(const std::string& spec, SymmetricGrid g) {
  WaveFunction w;
  w.x = axis_of(g);
  w.psi.resize(w.x.size());
  auto fill = [&](auto f) {
    for (std::size_t i = 0; i < w.x.size(); ++i) w.psi[i] = f(w.x[i]);
  };
  if (spec == "gaussian") {
    fill([](double x) { return std::pow(kPi, -0.25) * std::exp(-0.5 * x * x); });
  } else if (spec == "hermite1") {
    fill([](double x) {
      return std::sqrt(2.0) * std::pow(kPi, -0.25) * x * std::exp(-0.5 * x * x);
    });
  } else if (spec.rfind("squeezed:", 0) == 0) {
    const double sigma = std::stod(spec.substr(9));
    if (sigma <= 0.0) throw std::invalid_argument("make_state: sigma must be > 0");
    fill([sigma](double x) {
      return std::pow(kPi * sigma * sigma, -0.25) * std::exp(-0.5 * x * x / (sigma * sigma));
    });
  } else {
    throw std::invalid_argument("make_state: unknown state '" + spec + "'");
  }
  return w;
}

WignerGrid wigner_transform(const WaveFunction& psi, const std::vector<double>& p_grid) {
  if (psi.x.size() != psi.psi.size() || psi.x.size() < 5)
    throw std::invalid_argument("wigner_transform: malformed wavefunction");
  if (std::abs(psi.norm() - 1.0) > 1e-6)
    throw std::invalid_argument("wigner_transform: wavefunction is not unit norm");
  if (std::abs(psi.psi.front()) > 1e-8 || std::abs(psi.psi.back()) > 1e-8)
    throw std::invalid_argument("wigner_transform: insufficient decay at grid boundary");
  const std::size_t n = psi.x.size();
  const double h = psi.x[1] - psi.x[0];
  WignerGrid W;
  W.x = psi.x;
  W.p = p_grid;
  W.values.assign(n * p_grid.size(), 0.0);
  // s = 2 h k keeps x +- s/2 on the grid; trapezoid weight ds = 2h. The k and
  // -k terms are conjugate, so the sum is real by construction.
  std::vector<std::complex<double>> corr;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t kmax = std::min(i, n - 1 - i);
    corr.resize(kmax + 1);
    for (std::size_t k = 0; k <= kmax; ++k)
      corr[k] = psi.psi[i + k] * std::conj(psi.psi[i - k]);
    for (std::size_t j = 0; j < p_grid.size(); ++j) {
      const double theta = 2.0 * h * p_grid[j];
      const std::complex<double> rot(std::cos(theta), std::sin(theta));
      std::complex<double> w = rot;
      double s = corr[0].real();
      for (std::size_t k = 1; k <= kmax; ++k) {
        s += 2.0 * (corr[k] * w).real();
        w *= rot;
      }
      W.values[i * p_grid.size() + j] = s * h / kPi;
    }
  }
  return W;
}

WignerGrid wigner_transform(const WaveFunction& psi, SymmetricGrid p_grid) {
  return wigner_transform(psi, axis_of(p_grid));
}

std::vector<double> x_marginal(const WignerGrid& W) {
  const double hp = W.p[1] - W.p[0];
  std::vector<double> m(W.x.size());
  std::vector<double> row(W.p.size());
  for (std::size_t i = 0; i < W.x.size(); ++i) {
    for (std::size_t j = 0; j < W.p.size(); ++j) row[j] = W.at(i, j);
    m[i] = trapezoid(row, hp);
  }
  return m;
}

std::vector<double> p_marginal(const WignerGrid& W) {
  const double hx = W.x[1] - W.x[0];
  std::vector<double> m(W.p.size());
  std::vector<double> col(W.x.size());
  for (std::size_t j = 0; j < W.p.size(); ++j) {
    for (std::size_t i = 0; i < W.x.size(); ++i) col[i] = W.at(i, j);
    m[j] = trapezoid(col, hx);
  }
  return m;
}

double wigner_mass(const WignerGrid& W) {
  const double hx = W.x[1] - W.x[0];
  return trapezoid(x_marginal(W), hx);
}

std::vector<double> momentum_density(const WaveFunction& psi, const std::vector<double>& p_grid) {
  const double h = psi.x[1] - psi.x[0];
  std::vector<double> out(p_grid.size());
  for (std::size_t j = 0; j < p_grid.size(); ++j) {
    std::complex<double> acc = 0.0;
    for (std::size_t i = 0; i < psi.x.size(); ++i) {
      const double w = (i == 0 || i + 1 == psi.x.size()) ? 0.5 : 1.0;
      acc += w * psi.psi[i] * std::polar(1.0, -p_grid[j] * psi.x[i]);
    }
    out[j] = std::norm(acc * h) / (2.0 * kPi);
  }
  return out;
}

HudsonReport hudson_check(const WignerGrid& W) {
  HudsonReport rep;
  rep.min_value = W.values[0];
  for (std::size_t i = 0; i < W.x.size(); ++i)
    for (std::size_t j = 0; j < W.p.size(); ++j)
      if (W.at(i, j) < rep.min_value) {
        rep.min_value = W.at(i, j);
        rep.x_at = W.x[i];
        rep.p_at = W.p[j];
      }
  rep.nonnegative = rep.min_value >= -1e-10;
  return rep;
}

UncertaintyReport uncertainty_product(const WignerGrid& W) {
  auto moments = [](const std::vector<double>& axis, const std::vector<double>& dens) {
    const double h = axis[1] - axis[0];
    std::vector<double> m0(dens), m1(dens.size()), m2(dens.size());
    for (std::size_t i = 0; i < dens.size(); ++i) {
      m1[i] = axis[i] * dens[i];
      m2[i] = axis[i] * axis[i] * dens[i];
    }
    const double mass = trapezoid_uniform(m0, h);
    const double mean = trapezoid_uniform(m1, h) / mass;
    const double var = trapezoid_uniform(m2, h) / mass - mean * mean;
    if (var <= 0.0) throw std::domain_error("uncertainty_product: nonpositive variance");
    return std::sqrt(var);
  };
  UncertaintyReport rep;
  rep.sigma_x = moments(W.x, x_marginal(W));
  rep.sigma_p = moments(W.p, p_marginal(W));
  rep.product = rep.sigma_x * rep.sigma_p;
  return rep;
}

}  // namespace quasiprob
