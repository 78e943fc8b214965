// Atomic probability measures on C with exact rational weights, and the
// measure functionals: log det, log disc, D, logarithmic energy, free
// entropy, moments, conjugation symmetry and ball masses.

#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "intmeas/intpoly.hpp"
#include "intmeas/roots.hpp"

namespace intmeas {

struct Atom {
  std::complex<double> location;
  Rational weight;  // > 0; all weights sum to exactly 1
};

class AtomicMeasure {
 public:
  // Sorts by (re, im), merges atoms closer than merge_tol (weights added,
  // locations weight-averaged) and validates the invariants.
  AtomicMeasure(std::vector<Atom> atoms, double radius_bound, double merge_tol = 0.0);

  static AtomicMeasure dirac(std::complex<double> z);

  const std::vector<Atom>& atoms() const { return atoms_; }
  double radius_bound() const { return radius_bound_; }
  std::size_t size() const { return atoms_.size(); }

  std::vector<std::complex<double>> locations() const;
  std::vector<double> weights_as_double() const;

 private:
  std::vector<Atom> atoms_;
  double radius_bound_;
};

enum class Functional { log_det, log_disc, energy_total, energy_offdiag, free_entropy, ball_mass, moment };

// value may be +/- infinity (energy_total on atomic measures, free entropy at
// infinite energy).
struct FunctionalValue {
  double value;
  Functional functional;
  bool finite() const { return std::isfinite(value); }
};

// Equidistributed measure on a certified root multiset, weights = mult/degree.
AtomicMeasure delta_of(const RootSet& r, double radius_bound);

// integral_{z != 0} log|z| dmu  (atoms exactly at the origin are excluded)
FunctionalValue log_det_measure(const AtomicMeasure& mu);

// integral_{z != w} log|z-w| dmu(z) dnu(w)
FunctionalValue log_disc_measure(const AtomicMeasure& mu, const AtomicMeasure& nu);

// D(mu) = log_disc_measure(mu, mu)
double disc_functional(const AtomicMeasure& mu);

enum class EnergyMode { total, offdiag };

// total: +infinity for any atomic measure (the diagonal diverges);
// offdiag: -D(mu), the atomless-limit proxy.
FunctionalValue energy(const AtomicMeasure& mu, EnergyMode mode);

// chi = 3/4 + log(2 pi)/2 - I;  I = +infinity gives the -infinity marker.
FunctionalValue free_entropy(double energy_value);

// m_k = sum w z^k for k = 1..kmax
std::vector<std::complex<double>> moments(const AtomicMeasure& mu, int kmax);

// conjugation invariance with exactly matched weights, locations within tol
bool is_symmetric(const AtomicMeasure& mu, double tol);

// exact mass of the open disk B(center, eps)
Rational ball_mass(const AtomicMeasure& mu, std::complex<double> center, double eps);

// atoms at pairwise differences with product weights; radius bounds add
AtomicMeasure convolve(const AtomicMeasure& mu, const AtomicMeasure& nu);

}  // namespace intmeas
