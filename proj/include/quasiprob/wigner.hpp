#pragma once

#include <complex>
#include <string>
#include <vector>

#include "quasiprob/transforms.hpp"
#include "quasiprob/types.hpp"

namespace quasiprob {

struct WaveFunction {
  std::vector<double> x;
  std::vector<std::complex<double>> psi;

  double norm() const;  // int |psi|^2 dx by trapezoid
};

// "gaussian", "hermite1", or "squeezed:<sigma>" (psi ~ e^{-x^2/(2 sigma^2)}).
WaveFunction make_state(const std::string& spec, SymmetricGrid g = {8.0, 513});

// Phase-space quasi-density W(x, p), row-major over x then p. hbar = 1:
// W(x,p) = (1/2pi) int psi(x + s/2) conj(psi(x - s/2)) e^{isp} ds, discretized
// with s = 2h k so both arguments stay on the x-grid.
struct WignerGrid {
  std::vector<double> x;
  std::vector<double> p;
  std::vector<double> values;  // values[i * p.size() + j]

  double at(std::size_t i, std::size_t j) const { return values[i * p.size() + j]; }
};

WignerGrid wigner_transform(const WaveFunction& psi, const std::vector<double>& p_grid);
WignerGrid wigner_transform(const WaveFunction& psi, SymmetricGrid p_grid = {8.0, 513});

double wigner_mass(const WignerGrid& W);
std::vector<double> x_marginal(const WignerGrid& W);  // int W dp at each x
std::vector<double> p_marginal(const WignerGrid& W);  // int W dx at each p

// |psi_hat(p)|^2 with psi_hat(p) = (2pi)^{-1/2} int psi(x) e^{-ipx} dx.
std::vector<double> momentum_density(const WaveFunction& psi, const std::vector<double>& p_grid);

struct HudsonReport {
  double min_value = 0.0;
  double x_at = 0.0;
  double p_at = 0.0;
  bool nonnegative = false;  // min >= -1e-10
};
HudsonReport hudson_check(const WignerGrid& W);

struct UncertaintyReport {
  double sigma_x = 0.0;
  double sigma_p = 0.0;
  double product = 0.0;
};
UncertaintyReport uncertainty_product(const WignerGrid& W);

}  // namespace quasiprob
