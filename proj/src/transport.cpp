#include "intmeas/transport.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace intmeas {

namespace {

struct Cell {
  int i, j;
  BigInt mass;
};

// Spanning-tree transportation simplex with integer masses.
class TransportSolver {
 public:
  TransportSolver(std::vector<BigInt> supply, std::vector<BigInt> demand,
                  std::vector<double> cost)
      : n_(static_cast<int>(supply.size())),
        m_(static_cast<int>(demand.size())),
        supply_(std::move(supply)),
        demand_(std::move(demand)),
        cost_(std::move(cost)) {}

  void solve() {
    northwest_start();
    double scale = 1.0;
    for (double c : cost_) scale = std::max(scale, std::abs(c));
    const double eps = 1e-12 * scale;
    const long max_pivots = 2000L * (n_ + m_ + 4);
    int stall = 0;
    bool bland = false;
    for (long pivot = 0; pivot < max_pivots; ++pivot) {
      compute_duals();
      const int enter = find_entering(eps, bland);
      if (enter < 0) return;  // optimal
      const bool degenerate = do_pivot(enter);
      if (degenerate) {
        if (++stall > n_ + m_) bland = true;  // anti-cycling
      } else {
        stall = 0;
        bland = false;
      }
    }
    throw std::logic_error("w1_distance: pivot limit exceeded");
  }

  const std::vector<Cell>& basis() const { return basis_; }

 private:
  void northwest_start() {
    std::vector<BigInt> srem = supply_, drem = demand_;
    basis_.reserve(static_cast<std::size_t>(n_ + m_ - 1));
    in_basis_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(m_), false);
    int i = 0, j = 0;
    while (true) {
      BigInt x = std::min(srem[static_cast<std::size_t>(i)], drem[static_cast<std::size_t>(j)]);
      basis_.push_back({i, j, x});
      in_basis_[arc(i, j)] = true;
      srem[static_cast<std::size_t>(i)] -= x;
      drem[static_cast<std::size_t>(j)] -= x;
      if (i == n_ - 1 && j == m_ - 1) break;
      if (srem[static_cast<std::size_t>(i)] == 0 && i < n_ - 1)
        ++i;
      else
        ++j;
    }
  }

  std::size_t arc(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(m_) + static_cast<std::size_t>(j);
  }

  void compute_duals() {
    u_.assign(static_cast<std::size_t>(n_), 0.0);
    v_.assign(static_cast<std::size_t>(m_), 0.0);
    adj_.assign(static_cast<std::size_t>(n_ + m_), {});
    for (std::size_t c = 0; c < basis_.size(); ++c) {
      adj_[static_cast<std::size_t>(basis_[c].i)].push_back(static_cast<int>(c));
      adj_[static_cast<std::size_t>(n_ + basis_[c].j)].push_back(static_cast<int>(c));
    }
    std::vector<bool> seen(static_cast<std::size_t>(n_ + m_), false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    while (!q.empty()) {
      int node = q.front();
      q.pop();
      for (int c : adj_[static_cast<std::size_t>(node)]) {
        const Cell& cell = basis_[static_cast<std::size_t>(c)];
        int other = (node < n_) ? n_ + cell.j : cell.i;
        if (seen[static_cast<std::size_t>(other)]) continue;
        seen[static_cast<std::size_t>(other)] = true;
        const double c_ij = cost_[arc(cell.i, cell.j)];
        if (other >= n_)
          v_[static_cast<std::size_t>(other - n_)] = c_ij - u_[static_cast<std::size_t>(cell.i)];
        else
          u_[static_cast<std::size_t>(other)] = c_ij - v_[static_cast<std::size_t>(cell.j)];
        q.push(other);
      }
    }
  }

  // Most negative reduced cost (ties: lowest arc index); Bland mode takes the
  // first negative arc instead.
  int find_entering(double eps, bool bland) const {
    int best = -1;
    double best_r = -eps;
    for (int i = 0; i < n_; ++i) {
      const double ui = u_[static_cast<std::size_t>(i)];
      for (int j = 0; j < m_; ++j) {
        const std::size_t a = arc(i, j);
        if (in_basis_[a]) continue;
        const double r = cost_[a] - ui - v_[static_cast<std::size_t>(j)];
        if (r < best_r) {
          best_r = r;
          best = static_cast<int>(a);
          if (bland) return best;
        }
      }
    }
    return best;
  }

  // Returns true when the pivot was degenerate (zero mass moved).
  bool do_pivot(int enter_arc) {
    const int ei = enter_arc / m_, ej = enter_arc % m_;
    // tree path from source node ei to sink node n_+ej
    std::vector<int> parent_cell(static_cast<std::size_t>(n_ + m_), -1);
    std::vector<int> parent_node(static_cast<std::size_t>(n_ + m_), -1);
    std::vector<bool> seen(static_cast<std::size_t>(n_ + m_), false);
    std::queue<int> q;
    q.push(ei);
    seen[static_cast<std::size_t>(ei)] = true;
    while (!q.empty()) {
      int node = q.front();
      q.pop();
      if (node == n_ + ej) break;
      for (int c : adj_[static_cast<std::size_t>(node)]) {
        const Cell& cell = basis_[static_cast<std::size_t>(c)];
        int other = (node < n_) ? n_ + cell.j : cell.i;
        if (seen[static_cast<std::size_t>(other)]) continue;
        seen[static_cast<std::size_t>(other)] = true;
        parent_cell[static_cast<std::size_t>(other)] = c;
        parent_node[static_cast<std::size_t>(other)] = node;
        q.push(other);
      }
    }
    // walk back from the sink; cells alternate -,+ starting with - next to ei
    std::vector<int> path;  // cell indices from sink end back to ei
    for (int node = n_ + ej; node != ei; node = parent_node[static_cast<std::size_t>(node)])
      path.push_back(parent_cell[static_cast<std::size_t>(node)]);
    // path.back() is adjacent to ei: signs -, +, -, ... from the ei end
    std::vector<int> minus, plus;
    for (std::size_t k = 0; k < path.size(); ++k) {
      // position from the ei end:
      const std::size_t pos = path.size() - 1 - k;
      if (pos % 2 == 0)
        minus.push_back(path[k]);
      else
        plus.push_back(path[k]);
    }
    // theta = min mass over minus cells; leaving = lowest arc index among ties
    const BigInt* theta = nullptr;
    int leave = -1;
    for (int c : minus) {
      const Cell& cell = basis_[static_cast<std::size_t>(c)];
      if (!theta || cell.mass < *theta ||
          (cell.mass == *theta && arc(cell.i, cell.j) < arc(basis_[static_cast<std::size_t>(leave)].i,
                                                            basis_[static_cast<std::size_t>(leave)].j))) {
        theta = &cell.mass;
        leave = c;
      }
    }
    BigInt th = *theta;
    for (int c : minus) basis_[static_cast<std::size_t>(c)].mass -= th;
    for (int c : plus) basis_[static_cast<std::size_t>(c)].mass += th;
    const Cell leaving = basis_[static_cast<std::size_t>(leave)];
    in_basis_[arc(leaving.i, leaving.j)] = false;
    basis_[static_cast<std::size_t>(leave)] = {ei, ej, th};
    in_basis_[arc(ei, ej)] = true;
    return th == 0;
  }

  int n_, m_;
  std::vector<BigInt> supply_, demand_;
  std::vector<double> cost_;
  std::vector<Cell> basis_;
  std::vector<bool> in_basis_;
  std::vector<double> u_, v_;
  std::vector<std::vector<int>> adj_;
};

}  // namespace

std::pair<double, TransportPlan> w1_distance(const AtomicMeasure& mu, const AtomicMeasure& nu) {
  const auto& A = mu.atoms();
  const auto& B = nu.atoms();
  const int n = static_cast<int>(A.size()), m = static_cast<int>(B.size());

  // common denominator -> integral masses
  BigInt den = 1;
  for (const auto& a : A) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), a.weight.get_den().get_mpz_t());
  for (const auto& b : B) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), b.weight.get_den().get_mpz_t());
  std::vector<BigInt> supply(static_cast<std::size_t>(n)), demand(static_cast<std::size_t>(m));
  for (int i = 0; i < n; ++i)
    supply[static_cast<std::size_t>(i)] = A[static_cast<std::size_t>(i)].weight.get_num() *
                                          (den / A[static_cast<std::size_t>(i)].weight.get_den());
  for (int j = 0; j < m; ++j)
    demand[static_cast<std::size_t>(j)] = B[static_cast<std::size_t>(j)].weight.get_num() *
                                          (den / B[static_cast<std::size_t>(j)].weight.get_den());

  std::vector<double> cost(static_cast<std::size_t>(n) * static_cast<std::size_t>(m));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      cost[static_cast<std::size_t>(i) * static_cast<std::size_t>(m) + static_cast<std::size_t>(j)] =
          std::abs(A[static_cast<std::size_t>(i)].location - B[static_cast<std::size_t>(j)].location);

  TransportSolver solver(std::move(supply), std::move(demand), std::move(cost));
  solver.solve();

  TransportPlan plan;
  double total = 0.0;
  for (const auto& cell : solver.basis()) {
    if (cell.mass == 0) continue;
    Rational mass(cell.mass, den);
    mass.canonicalize();
    const double d = std::abs(A[static_cast<std::size_t>(cell.i)].location -
                              B[static_cast<std::size_t>(cell.j)].location);
    total += mass.get_d() * d;
    plan.entries.push_back({cell.i, cell.j, std::move(mass)});
  }
  std::sort(plan.entries.begin(), plan.entries.end(), [](const PlanEntry& a, const PlanEntry& b) {
    return a.source != b.source ? a.source < b.source : a.target < b.target;
  });
  plan.cost = total;
  return {total, plan};
}

double kr_dual_bound(const AtomicMeasure& mu, const AtomicMeasure& nu,
                     const std::vector<LipschitzWitness>& witnesses) {
  std::vector<std::complex<double>> support = mu.locations();
  {
    auto nb = nu.locations();
    support.insert(support.end(), nb.begin(), nb.end());
  }
  const std::size_t n = mu.size();
  double best = 0.0;
  for (std::size_t w = 0; w < witnesses.size(); ++w) {
    const auto& f = witnesses[w].values;
    if (f.size() != support.size())
      throw std::invalid_argument("kr_dual_bound: witness size does not match the joint support");
    for (std::size_t a = 0; a < support.size(); ++a)
      for (std::size_t b = a + 1; b < support.size(); ++b) {
        const double d = std::abs(support[a] - support[b]);
        if (std::abs(f[a] - f[b]) > d * (1.0 + 1e-12) + 1e-12)
          throw LipschitzViolation(w, a, b);
      }
    double diff = 0.0;
    for (std::size_t i = 0; i < mu.size(); ++i)
      diff += mu.atoms()[i].weight.get_d() * f[i];
    for (std::size_t j = 0; j < nu.size(); ++j)
      diff -= nu.atoms()[j].weight.get_d() * f[n + j];
    best = std::max(best, std::abs(diff));
  }
  return best;
}

}  // namespace intmeas
