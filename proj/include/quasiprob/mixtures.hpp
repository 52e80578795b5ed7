#pragma once

#include <functional>
#include <string>

#include "quasiprob/transforms.hpp"
#include "quasiprob/types.hpp"

namespace quasiprob {

// One catalog entry: a scale-mixture-of-normals family p(x) = int (2 pi v)^{-1/2}
// e^{-x^2/2v} dF(v). Closed forms are optional cross-checks; when both are set,
// smn_density(mixing, x) must match density_closed_form.
struct SmnFamily {
  std::string name;
  SignedMixingMeasure mixing;
  std::function<double(double)> density_closed_form;  // may be empty
  std::function<double(double)> charfn_closed_form;   // may be empty
};

// normal, laplace, cauchy, quartic (signed mixing), normal_mix (1/2 N(0,1) + 1/2 N(0,4)).
std::vector<SmnFamily> smn_catalog();
const SmnFamily& smn_family(const std::string& name);

// p(x) = int_0^inf (2 pi v)^{-1/2} e^{-x^2/(2v)} dF(v).
double smn_density(const SignedMixingMeasure& F, double x);

// phi(t) = int_0^inf e^{-v t^2 / 2} dF(v).
double smn_charfn(const SignedMixingMeasure& F, double t);

// Signed mixing measure of the quartic density (4/pi) / (4 + x^4):
// in the reciprocal (precision) variable u = 1/v the density is
// g(u) = sqrt(2/pi) u^{-1/2} sin u, negative on every second half-period.
SignedMixingMeasure quartic_mixing();

// 1 / (1 + |t|^alpha), alpha in (0, 4].
double linnik_charfn(double alpha, double t);

struct LinnikResult {
  double value = 0.0;
  // The x = 0 inversion integral diverges for alpha <= 1; the reported value is
  // a truncated integral and this flag is raised.
  bool slowly_convergent = false;
  // alpha > 2: the mixing representation is signed (extraordinary branch).
  bool extraordinary = false;
};
// Density by pointwise inversion of linnik_charfn.
LinnikResult linnik_density(double alpha, double x);
GridDensity linnik_grid(double alpha, SymmetricGrid g = {});

struct LinnikMassReport {
  double body = 0.0;  // P(|X| <= cutoff) by the Dirichlet-kernel integral
  double tail = 0.0;  // asymptotic tail series beyond the cutoff
  double total = 0.0;
  double cutoff = 0.0;
};
LinnikMassReport linnik_mass_check(double alpha, double cutoff = 50.0);

// Density of the positive stable law with Laplace transform e^{-lambda^rho},
// rho in (0, 1), by the Zolotarev-Kanter single integral.
double stable_positive_density(double rho, double x);

// Mixing measure of the exponential-power family exp(-|t|^alpha):
// f(s) = (1/2) g_{alpha/2}(s/2) with g the positive stable density above;
// alpha = 2 degenerates to a unit atom at s = 2.
SignedMixingMeasure exp_power_mixing(double alpha);

struct MvQuarticReport {
  double lhs = 0.0;    // int_0^inf N(x; 0, t^{-1} C) t^{-n/2} sin(t/2) dt
  double rhs = 0.0;    // 1 / (1 + (x^T C^{-1} x)^2)
  double kappa = 0.0;  // lhs / rhs, expected 2 (2 pi)^{-n/2} det(C)^{-1/2}
  double q = 0.0;      // x^T C^{-1} x
};
// n <= 3; C symmetric positive definite (row-major n x n).
MvQuarticReport multivariate_quartic_check(int n, const std::vector<double>& C,
                                           const std::vector<double>& x);

struct GneitingResult {
  double sigma_p = 0.0;
  double sigma_dual = 0.0;
  double product = 0.0;
  bool infinite = false;    // a second moment diverges under grid doubling
  bool applicable = true;   // false when p or its dual is signed
};
// Uncertainty product sigma_p * sigma_{p_hat} (>= 1, equality iff normal).
GneitingResult gneiting_product(const SmnFamily& family);

}  // namespace quasiprob
