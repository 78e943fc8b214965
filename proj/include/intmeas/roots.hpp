// Certified extraction of the root multiset of an integer polynomial.
// Multiplicities come from the exact squarefree decomposition; the simple
// roots of each squarefree factor are refined by Aberth iteration and wrapped
// in inclusion disks certified against the exact integer coefficients.

#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "intmeas/intpoly.hpp"

namespace intmeas {

struct RootEntry {
  std::complex<double> location;
  int multiplicity = 1;
  double radius = 0.0;  // certified: B(location, radius) holds exactly `multiplicity` roots
};

struct RootSet {
  std::vector<RootEntry> entries;  // sorted by (re, im); conjugate-symmetric
  int degree = 0;
};

// Thrown when certification cannot reach the target radius; carries the best
// radii achieved so the failure is never silent.
struct RootSolveError : std::runtime_error {
  explicit RootSolveError(std::string what, std::vector<double> radii)
      : std::runtime_error(std::move(what)), best_radii(std::move(radii)) {}
  std::vector<double> best_radii;
};

RootSet find_roots(const IntPolynomial& p, double target_radius = 1e-10);

// Cauchy bound 1 + max |a_k| on the root moduli of a monic polynomial.
double root_bound(const IntPolynomial& p);

}  // namespace intmeas
