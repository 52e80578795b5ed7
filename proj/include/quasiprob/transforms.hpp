#pragma once

#include <functional>

#include "quasiprob/types.hpp"

namespace quasiprob {

// Symmetric uniform grid on [-extent, extent]; points should be odd so that 0
// is a grid point.
struct SymmetricGrid {
  double extent = 8.0;
  int points = kDefaultGridPoints;
};

// Handling of slowly decaying grids in the transform integrals.
//   None: boundary values must decay below 1e-12 or the transform is rejected.
//   Auto: a rational-quadratic tail c/(a + x^2) (with a power-law fallback) is
//         fitted to the outer samples and its contribution beyond the grid is
//         integrated analytically / by oscillatory quadrature.
enum class TailModel { None, Auto };

// phi(t) = int e^{itx} p(x) dx on the requested frequency grid.
CharFn charfn(const GridDensity& d, SymmetricGrid out = {}, TailModel tail = TailModel::None);

// p(x) = (1/2pi) int e^{-itx} phi(t) dt. Rejects non-Hermitian input.
GridDensity invert_charfn(const CharFn& phi, SymmetricGrid out = {},
                          TailModel tail = TailModel::None);

// Dual density p_hat(t) = phi_p(t) / (2 pi p(0)), unit mass by construction.
GridDensity dual_density(const GridDensity& p, SymmetricGrid out = {},
                         TailModel tail = TailModel::Auto);

// Gneiting's mixing-measure transform: f_hat(v) = (2pi)^{-1/2} p(0)^{-1} v^{-3/2} f(1/v).
SignedMixingMeasure dual_mixing(const SignedMixingMeasure& F, double p0);

// f(x) = int_0^inf e^{-sx} dF(s), signed weights permitted.
double laplace_transform(const SignedMixingMeasure& F, double x);

struct CmReport {
  bool pass = true;
  double x_violation = 0.0;
  int order_violation = -1;
  double worst_value = 0.0;
};
// Forward-difference complete-monotonicity check: (-1)^j Delta_h^j f(x) >= -tol
// for j = 0..order on a grid over [a, b], h = (b-a)/2048,
// tol = 1e-7 * max|f|. Failure is a valid report, not an error.
CmReport completely_monotone_test(const std::function<double(double)>& f, double a, double b,
                                  int order);

struct LevyReport {
  double lhs = 0.0;  // (1/pi) int_0^inf e^{-tu} sin(sqrt(u)) du
  double rhs = 0.0;  // (2 sqrt(pi))^{-1} t^{-3/2} e^{-1/(4t)}
  double diff = 0.0;
};
LevyReport levy_half_identity_check(double t);

// Levy (phi_{1/2}) density (1/(2 sqrt(pi))) t^{-3/2} e^{-1/(4t)}.
double levy_half_density(double t);

}  // namespace quasiprob
