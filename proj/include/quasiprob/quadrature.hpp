#pragma once

#include <functional>
#include <vector>

namespace quasiprob {

struct QuadResult {
  double value = 0.0;
  double abs_err = 0.0;
  bool converged = false;
  int panels = 0;
};

// Adaptive Gauss-Kronrod 7-15 on a finite interval.
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double abs_tol = 1e-10, int max_depth = 48);

// Integral over (0, inf) via the substitution v = u/(1-u) onto (0,1),
// followed by adaptive refinement. Intended for smooth, decaying integrands.
QuadResult integrate_half_line(const std::function<double(double)>& f, double abs_tol = 1e-10);

// Integral over (0, inf) of an oscillatory integrand whose factor changes sign
// at t = k * zero_spacing. Panel integrals between consecutive zeros form an
// (eventually) alternating series; partial sums are Euler-accelerated. Returns
// converged = false when max_panels is exhausted without meeting abs_tol,
// which signals a divergent or mis-specified integrand.
QuadResult oscillatory_integral(const std::function<double(double)>& f, double zero_spacing,
                                double abs_tol = 1e-10, int max_panels = 400);

// Euler transformation of the partial sums of a (near-)alternating series.
// Returns the accelerated limit; *abs_err receives a convergence estimate.
double euler_accelerate(const std::vector<double>& terms, double* abs_err);

// Plain trapezoid rule on a uniform grid (spacing h).
double trapezoid_uniform(const std::vector<double>& values, double h);

}  // namespace quasiprob
