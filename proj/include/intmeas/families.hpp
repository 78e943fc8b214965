// Explicit polynomial families (lemniscate powers, the Ramsay sequence,
// roots of unity, path-graph characteristic polynomials) and the experiments
// built on them: equidistribution runs, the Ramsay log-det gap, exhaustive
// enumeration of complete root sets in a compact, and the discriminant
// regularity chain.

#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "intmeas/intpoly.hpp"
#include "intmeas/measure.hpp"
#include "intmeas/potential.hpp"

namespace intmeas {

struct FamilySpec {
  enum class Kind { lemniscate_power, ramsay, roots_of_unity, chebyshev_path };
  Kind kind = Kind::roots_of_unity;
  std::optional<IntPolynomial> q;  // lemniscate_power base, monic
  long m = 0, k = 0;               // lemniscate_power exponent data
  long lambda = 0;                 // ramsay: even, >= 2

  static FamilySpec lemniscate_power(IntPolynomial q, long m, long k);
  static FamilySpec ramsay(long lambda);
  static FamilySpec roots_of_unity();
  static FamilySpec chebyshev_path();
};

// lemniscate_power: q^(k*idx) - m^(idx*deg q); ramsay: t^idx + (lambda^(idx-1)/2) t + 2;
// roots_of_unity: t^idx - 1; chebyshev_path: det(t I - A(path_idx)) by the
// three-term recurrence (roots 2 cos(j pi/(idx+1))).
IntPolynomial family_member(const FamilySpec& f, int idx);

struct ConvergenceRecord {
  int idx = 0;
  double w1_to_target = 0;
  std::vector<double> moment_gaps;
  double weil_height = 0;
  double offdiag_energy = 0;
  double log_det = 0;
  bool solved = true;
};

struct ConvergenceReport {
  std::vector<ConvergenceRecord> records;
  bool w1_decreasing = false;     // consecutive, with float-noise slack
  bool heights_vanishing = false;
  bool moments_converging = false;
  bool all_solved = false;
  bool pass() const { return w1_decreasing && heights_vanishing && moments_converging && all_solved; }
};

ConvergenceReport run_convergence(const FamilySpec& f, const std::vector<int>& indices,
                                  const CompactSetSpec& target, double precision = 1e-10);

struct RamsayRecord {
  int idx = 0;
  int roots_in_unit_disk = 0;
  bool certified = false;   // every root disk cleanly inside or outside B(0,1)
  double t0_abs = 0;        // modulus of the unique small root
  double log_t0_over_n = 0; // |log|t0|| / n
  double inner_integral = 0;  // int_{|z|<1} log|z| dDelta(p_n)
  double log_det = 0;
  bool bound_ok = false;    // |log|t0||/n >= log(lambda)/2
};

struct RamsayReport {
  long lambda = 0;
  std::vector<RamsayRecord> records;
  bool pass() const {
    for (const auto& r : records)
      if (!r.certified || r.roots_in_unit_disk != 1 || !r.bound_ok) return false;
    return !records.empty();
  }
};

RamsayReport ramsay_gap_experiment(long lambda, int n_min, int n_max, double precision = 1e-10);

struct EnumerationBudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exhaustive list of the minimal (irreducible-in-list) monic integer
// polynomials of degree <= max_degree with all roots in E. Interval shapes
// are decided by exact Sturm counts, disks by certified root inclusion.
std::vector<IntPolynomial> enumerate_complete_sets(const CompactSetSpec& E, int max_degree);

struct RegularityChainReport {
  int degree = 0;
  int ball_count = 0;       // roots of the squarefree part in B(beta, eps)
  double delta = 0;         // ball_count / degree
  double log_disc_abs = 0;  // log |disc| of the squarefree part (exact value, logged)
  double upper_log = 0;     // ball_count(ball_count-1) log(2 eps) + n^2 log(2 lambda)
  bool indeterminate = false;  // a root disk straddles the ball boundary
  bool holds = false;          // 0 <= log|disc| <= upper_log
};

RegularityChainReport regularity_chain_check(const IntPolynomial& p, std::complex<double> beta,
                                             double eps, double lambda,
                                             double precision = 1e-10);

}  // namespace intmeas
