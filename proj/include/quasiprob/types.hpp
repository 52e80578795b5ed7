#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace quasiprob {

// Global tolerances and defaults shared across all modules.
inline constexpr double kMassTol = 1e-8;
inline constexpr int kDefaultSeriesOrder = 64;
inline constexpr int kDefaultGridPoints = 4097;

// Discrete signed distribution: atoms with real (possibly negative) weights.
// A valid SignedPmf has total mass 1 within kMassTol; weights may be negative,
// in which case is_ordinary() is false.
struct SignedPmf {
  std::vector<std::pair<int, double>> atoms;

  double total_mass() const {
    double s = 0.0;
    for (const auto& [idx, w] : atoms) s += w;
    return s;
  }
  double total_variation() const {
    double s = 0.0;
    for (const auto& [idx, w] : atoms) s += std::abs(w);
    return s;
  }
  bool is_ordinary(double tol = kMassTol) const {
    for (const auto& [idx, w] : atoms)
      if (w < -tol) return false;
    return true;
  }
};

// Truncated real-coefficient power series c_0 + c_1 s + ... + c_N s^N.
// Stands for a (possibly signed) probability generating function.
class PowerSeries {
 public:
  PowerSeries() = default;
  explicit PowerSeries(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("PowerSeries: empty coefficient list");
    for (double c : coeffs_)
      if (!std::isfinite(c)) throw std::invalid_argument("PowerSeries: non-finite coefficient");
  }
  static PowerSeries delta0(int order) {
    std::vector<double> c(static_cast<size_t>(order) + 1, 0.0);
    c[0] = 1.0;
    return PowerSeries(std::move(c));
  }

  const std::vector<double>& coeffs() const { return coeffs_; }
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  double operator[](int k) const {
    return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[k] : 0.0;
  }
  double eval(double s) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * s + *it;
    return acc;
  }
  // Mass at s=1 (sum of coefficients, when convergent).
  double eval_one() const { return eval(1.0); }

  SignedPmf to_pmf() const {
    SignedPmf p;
    for (int k = 0; k <= order(); ++k) p.atoms.emplace_back(k, coeffs_[k]);
    return p;
  }

 private:
  std::vector<double> coeffs_;
};

// Densely sampled signed density on a strictly increasing uniform grid.
struct GridDensity {
  std::vector<double> x;
  std::vector<double> values;
  bool normalized = false;

  void validate() const;
  double spacing() const;
  // Index of x == 0 (throws if 0 is not a grid point).
  std::size_t zero_index() const;
  double at_zero() const { return values[zero_index()]; }
};

// Complex characteristic function sampled on a uniform frequency grid.
struct CharFn {
  std::vector<double> t;
  std::vector<std::complex<double>> values;

  // phi(0), i.e. the total mass of the underlying measure.
  std::complex<double> at_zero() const;
  // Hermitian symmetry phi(-t) = conj(phi(t)), required for real measures.
  bool is_hermitian(double tol = 1e-9) const;
};

// states x conditions matrix of signed conditionals with nonnegative base rates.
struct ConditionalTable {
  std::vector<std::string> states;
  std::vector<std::string> conditions;
  // entries[i][j] = p(state i | condition j); may be negative or exceed 1.
  std::vector<std::vector<double>> entries;
  // base[j] = p(condition j), nonnegative.
  std::vector<double> base;

  void validate(double tol = kMassTol) const;
};

// Signed measure on (0, inf) used as a scale-mixture weight. One of:
//  - atoms:   finite list of (location v > 0, signed weight)
//  - density: smooth callable f(v) on (0, inf)
//  - grid:    sampled values on a v-grid
//  - reciprocal_density: density g(u) in the reciprocal variable u = 1/v,
//    so that  int K(v) dF(v) = int_0^inf K(1/u) g(u) du.  Used for the
//    sin-weighted families, where g oscillates with sign changes at
//    u = k * zero_spacing and integrals need alternating-series acceleration.
class SignedMixingMeasure {
 public:
  struct Atom {
    double location;
    double weight;
  };
  enum class Kind { Atoms, Density, Grid, ReciprocalDensity };

  static SignedMixingMeasure atoms(std::vector<Atom> a, bool normalized);
  // zero_spacing > 0 marks an oscillatory density with sign changes at
  // v = k * zero_spacing; its integrals run through accelerated quadrature.
  static SignedMixingMeasure density(std::function<double(double)> f, bool normalized,
                                     double zero_spacing = 0.0);
  static SignedMixingMeasure grid(GridDensity g, bool normalized);
  static SignedMixingMeasure reciprocal_density(std::function<double(double)> g,
                                                double zero_spacing, bool normalized);

  Kind kind() const { return kind_; }
  bool normalized() const { return normalized_; }
  const std::vector<Atom>& atom_list() const { return atoms_; }
  const GridDensity& grid_data() const { return grid_; }
  double zero_spacing() const { return zero_spacing_; }

  // Density in the natural variable v (defined for Density, ReciprocalDensity
  // and Grid kinds; ReciprocalDensity maps back via f(v) = g(1/v)/v^2).
  double density_at(double v) const;
  // Density in the reciprocal variable u (ReciprocalDensity kind only).
  double reciprocal_density_at(double u) const;

  // Signed integral  int_0^inf kernel(v) dF(v).  The oscillatory kind routes
  // through alternating-series accelerated quadrature in u.
  double integrate_kernel(const std::function<double(double)>& kernel,
                          double abs_tol = 1e-10) const;
  double total_mass(double abs_tol = 1e-10) const;

 private:
  Kind kind_ = Kind::Atoms;
  bool normalized_ = false;
  std::vector<Atom> atoms_;
  std::function<double(double)> fn_;
  GridDensity grid_;
  double zero_spacing_ = 0.0;
};

// Trapezoid integral of a uniform-grid density. Rejects non-uniform grids.
double integrate(const GridDensity& d);

}  // namespace quasiprob
