#include "quasiprob/types.hpp"

#include <cmath>

#include "quasiprob/quadrature.hpp"

namespace quasiprob {

void GridDensity::validate() const {
  if (x.size() != values.size() || x.size() < 2)
    throw std::invalid_argument("GridDensity: grid/value size mismatch");
  const double h = x[1] - x[0];
  if (h <= 0.0) throw std::invalid_argument("GridDensity: grid not strictly increasing");
  for (std::size_t i = 1; i < x.size(); ++i) {
    const double step = x[i] - x[i - 1];
    if (step <= 0.0 || std::abs(step - h) > 1e-9 * std::max(1.0, std::abs(h)))
      throw std::invalid_argument("GridDensity: non-uniform grid");
  }
  if (normalized) {
    const double mass = trapezoid_uniform(values, h);
    if (std::abs(mass - 1.0) > 100 * kMassTol)
      throw std::invalid_argument("GridDensity: normalized flag set but mass != 1");
  }
}

double GridDensity::spacing() const {
  if (x.size() < 2) throw std::invalid_argument("GridDensity: need at least two points");
  return x[1] - x[0];
}

std::size_t GridDensity::zero_index() const {
  const double h = spacing();
  for (std::size_t i = 0; i < x.size(); ++i)
    if (std::abs(x[i]) < 1e-9 * h) return i;
  throw std::invalid_argument("GridDensity: 0 is not a grid point");
}

std::complex<double> CharFn::at_zero() const {
  const double h = t[1] - t[0];
  for (std::size_t i = 0; i < t.size(); ++i)
    if (std::abs(t[i]) < 1e-9 * std::abs(h)) return values[i];
  throw std::invalid_argument("CharFn: 0 is not a grid point");
}

bool CharFn::is_hermitian(double tol) const {
  const std::size_t n = t.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = n - 1 - i;
    if (std::abs(t[i] + t[j]) > 1e-9) return false;  // grid not symmetric
    if (std::abs(values[i] - std::conj(values[j])) > tol) return false;
  }
  return true;
}

void ConditionalTable::validate(double tol) const {
  const std::size_t ns = states.size();
  const std::size_t nc = conditions.size();
  if (entries.size() != ns || base.size() != nc)
    throw std::invalid_argument("ConditionalTable: shape mismatch");
  for (const auto& row : entries)
    if (row.size() != nc) throw std::invalid_argument("ConditionalTable: ragged entries");
  double base_sum = 0.0;
  for (double b : base) {
    if (b < 0.0) throw std::invalid_argument("ConditionalTable: negative base rate");
    base_sum += b;
  }
  if (std::abs(base_sum - 1.0) > tol)
    throw std::invalid_argument("ConditionalTable: base rates do not sum to 1");
  for (std::size_t j = 0; j < nc; ++j) {
    double col = 0.0;
    for (std::size_t i = 0; i < ns; ++i) col += entries[i][j];
    if (std::abs(col - 1.0) > tol)
      throw std::invalid_argument("ConditionalTable: column '" + conditions[j] +
                                  "' does not sum to 1");
  }
}

SignedMixingMeasure SignedMixingMeasure::atoms(std::vector<Atom> a, bool normalized) {
  SignedMixingMeasure m;
  m.kind_ = Kind::Atoms;
  for (const Atom& at : a)
    if (at.location <= 0.0)
      throw std::invalid_argument("SignedMixingMeasure: atom location must be > 0");
  m.atoms_ = std::move(a);
  m.normalized_ = normalized;
  if (normalized && std::abs(m.total_mass() - 1.0) > kMassTol)
    throw std::invalid_argument("SignedMixingMeasure: atoms flagged normalized but mass != 1");
  return m;
}

SignedMixingMeasure SignedMixingMeasure::density(std::function<double(double)> f,
                                                 bool normalized, double zero_spacing) {
  if (zero_spacing < 0.0)
    throw std::invalid_argument("SignedMixingMeasure: zero_spacing must be >= 0");
  SignedMixingMeasure m;
  m.kind_ = Kind::Density;
  m.fn_ = std::move(f);
  m.zero_spacing_ = zero_spacing;
  m.normalized_ = normalized;
  return m;
}

SignedMixingMeasure SignedMixingMeasure::grid(GridDensity g, bool normalized) {
  g.validate();
  for (double v : g.x)
    if (v <= 0.0) throw std::invalid_argument("SignedMixingMeasure: grid points must be > 0");
  SignedMixingMeasure m;
  m.kind_ = Kind::Grid;
  m.grid_ = std::move(g);
  m.normalized_ = normalized;
  return m;
}

SignedMixingMeasure SignedMixingMeasure::reciprocal_density(std::function<double(double)> g,
                                                            double zero_spacing,
                                                            bool normalized) {
  if (zero_spacing <= 0.0)
    throw std::invalid_argument("SignedMixingMeasure: zero_spacing must be > 0");
  SignedMixingMeasure m;
  m.kind_ = Kind::ReciprocalDensity;
  m.fn_ = std::move(g);
  m.zero_spacing_ = zero_spacing;
  m.normalized_ = normalized;
  return m;
}

double SignedMixingMeasure::density_at(double v) const {
  if (v <= 0.0) throw std::domain_error("SignedMixingMeasure: density_at requires v > 0");
  switch (kind_) {
    case Kind::Density:
      return fn_(v);
    case Kind::ReciprocalDensity:
      return fn_(1.0 / v) / (v * v);
    case Kind::Grid: {
      // Linear interpolation inside the grid, zero outside.
      const auto& g = grid_;
      if (v < g.x.front() || v > g.x.back()) return 0.0;
      const double h = g.spacing();
      const std::size_t i =
          std::min(g.x.size() - 2, static_cast<std::size_t>((v - g.x.front()) / h));
      const double w = (v - g.x[i]) / h;
      return (1.0 - w) * g.values[i] + w * g.values[i + 1];
    }
    case Kind::Atoms:
      throw std::domain_error("SignedMixingMeasure: atomic measure has no density");
  }
  return 0.0;
}

double SignedMixingMeasure::reciprocal_density_at(double u) const {
  if (kind_ != Kind::ReciprocalDensity)
    throw std::domain_error("SignedMixingMeasure: not a reciprocal-variable density");
  return fn_(u);
}

double SignedMixingMeasure::integrate_kernel(const std::function<double(double)>& kernel,
                                             double abs_tol) const {
  switch (kind_) {
    case Kind::Atoms: {
      // Fixed summation order for bit-identical reductions.
      double s = 0.0;
      for (const Atom& a : atoms_) s += a.weight * kernel(a.location);
      return s;
    }
    case Kind::Density: {
      QuadResult r =
          (zero_spacing_ > 0.0)
              ? oscillatory_integral([&](double v) { return kernel(v) * fn_(v); },
                                     zero_spacing_, abs_tol)
              : integrate_half_line([&](double v) { return kernel(v) * fn_(v); }, abs_tol);
      if (!r.converged)
        throw std::domain_error("SignedMixingMeasure: kernel integral did not converge");
      return r.value;
    }
    case Kind::Grid: {
      std::vector<double> vals(grid_.x.size());
      for (std::size_t i = 0; i < grid_.x.size(); ++i)
        vals[i] = kernel(grid_.x[i]) * grid_.values[i];
      return trapezoid_uniform(vals, grid_.spacing());
    }
    case Kind::ReciprocalDensity: {
      QuadResult r = oscillatory_integral([&](double u) { return kernel(1.0 / u) * fn_(u); },
                                          zero_spacing_, abs_tol);
      if (!r.converged)
        throw std::domain_error("SignedMixingMeasure: oscillatory kernel integral diverged");
      return r.value;
    }
  }
  return 0.0;
}

double SignedMixingMeasure::total_mass(double abs_tol) const {
  return integrate_kernel([](double) { return 1.0; }, abs_tol);
}

double integrate(const GridDensity& d) {
  d.validate();
  return trapezoid_uniform(d.values, d.spacing());
}

}  // namespace quasiprob
