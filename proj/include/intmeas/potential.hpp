// Symmetric compact subsets of C with closed-form Green functions and
// capacities, greedy Leja configurations and the transfinite-diameter
// capacity estimator, equilibrium-measure discretizations and Weil heights.

#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "intmeas/intpoly.hpp"
#include "intmeas/measure.hpp"
#include "intmeas/roots.hpp"

namespace intmeas {

struct UnsupportedShape : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Only conjugation-symmetric sets are constructible: disk centers and
// intervals live on the real axis, lemniscates come from integer polynomials,
// clouds are checked for symmetry.
class CompactSetSpec {
 public:
  enum class Shape { disk, circle, interval, lemniscate, cloud };

  static CompactSetSpec disk(double center, double r);
  static CompactSetSpec circle(double r);
  static CompactSetSpec interval(double a, double b);
  static CompactSetSpec lemniscate(IntPolynomial p, double R);
  static CompactSetSpec cloud(std::vector<std::complex<double>> points);

  Shape shape() const { return shape_; }
  double center() const { return center_; }
  double radius() const { return radius_; }
  double a() const { return a_; }
  double b() const { return b_; }
  const IntPolynomial& lem_poly() const;
  double lem_level() const { return level_; }
  const std::vector<std::complex<double>>& cloud_points() const { return cloud_; }

  // Boundary sample of ~grid_size points, cached; deterministic ordering.
  const std::vector<std::complex<double>>& discretization(int grid_size) const;

  // Largest modulus over the set (root bound for enumeration).
  double modulus_bound() const;

 private:
  CompactSetSpec() = default;
  Shape shape_ = Shape::circle;
  double center_ = 0, radius_ = 1, a_ = 0, b_ = 0, level_ = 0;
  std::optional<IntPolynomial> poly_;
  std::vector<std::complex<double>> cloud_;
  mutable std::vector<std::complex<double>> grid_;
  mutable int grid_n_ = 0;
};

struct CapacityEstimate {
  enum class Method { explicit_form, leja };
  double value = 0;
  Method method = Method::explicit_form;
  int n_points = 0;
  double trend = 0;  // value(n) - value(n/2); zero for explicit
};

// Closed-form exterior Green function; zero on the set. Throws
// UnsupportedShape for clouds.
double green_value(const CompactSetSpec& E, std::complex<double> z);

// disk/circle r -> r; interval [a,b] -> (b-a)/4; lemniscate(p,R) -> R^(1/deg p)
CapacityEstimate capacity_explicit(const CompactSetSpec& E);

// Greedy max-product configuration from the boundary discretization;
// ties broken by the lowest candidate index.
std::vector<std::complex<double>> leja_points(const CompactSetSpec& E, int n, int grid_size = 10000);

// Transfinite-diameter estimate exp( 2/(n(n-1)) * sum_{i<j} log|z_i - z_j| )
// on the Leja configuration; trend compares against the n/2-point prefix.
CapacityEstimate capacity_leja(const CompactSetSpec& E, int n, int grid_size = 10000);

// n equal-weight atoms at closed-form quantiles (circle: roots of unity;
// interval: arcsine midpoint quantiles; lemniscate: the n*deg(p) preimages of
// R * (n-th roots of unity)).
AtomicMeasure equilibrium_discretized(const CompactSetSpec& E, int n);

// h_E = average of the Green values over the root multiset; always >= 0.
double weil_height(const CompactSetSpec& E, const RootSet& r);

}  // namespace intmeas
