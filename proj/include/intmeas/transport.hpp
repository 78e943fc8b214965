// Exact 1-Wasserstein distance between atomic measures under Euclidean cost.
// Masses are brought to a common denominator and the transportation problem is
// solved as an integral min-cost flow by the transportation simplex; the plan
// marginals are exact rationals, only the Euclidean costs are floating point.

#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "intmeas/measure.hpp"

namespace intmeas {

struct PlanEntry {
  int source = 0;
  int target = 0;
  Rational mass;
};

struct TransportPlan {
  std::vector<PlanEntry> entries;  // positive masses only; marginals exact
  double cost = 0.0;
};

std::pair<double, TransportPlan> w1_distance(const AtomicMeasure& mu, const AtomicMeasure& nu);

// A 1-Lipschitz test function given by its values on the joint support
// (mu atoms first, then nu atoms).
struct LipschitzWitness {
  std::vector<double> values;
};

struct LipschitzViolation : std::invalid_argument {
  LipschitzViolation(std::size_t witness, std::size_t a, std::size_t b)
      : std::invalid_argument("kr_dual_bound: witness is not 1-Lipschitz on the joint support"),
        witness_index(witness),
        point_a(a),
        point_b(b) {}
  std::size_t witness_index, point_a, point_b;
};

// max over witnesses of |int f dmu - int f dnu|; each witness is verified
// 1-Lipschitz on the finite joint support first (pairwise slope check).
double kr_dual_bound(const AtomicMeasure& mu, const AtomicMeasure& nu,
                     const std::vector<LipschitzWitness>& witnesses);

}  // namespace intmeas
