#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "intmeas/transport.hpp"
#include "oracles.hpp"

using namespace intmeas;

namespace {

IntPolynomial P(std::initializer_list<long> c) { return IntPolynomial(c); }

AtomicMeasure delta(const IntPolynomial& p) {
  return delta_of(find_roots(p, 1e-12), root_bound(p));
}

// random atomic measure with rational weights over a small denominator
AtomicMeasure random_measure(std::mt19937& rng, int max_atoms, bool real_line) {
  std::uniform_int_distribution<int> na(1, max_atoms);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  const int n = na(rng);
  std::uniform_int_distribution<int> wd(1, 6);
  std::vector<int> w(static_cast<std::size_t>(n));
  int total = 0;
  for (auto& v : w) {
    v = wd(rng);
    total += v;
  }
  std::vector<Atom> atoms;
  for (int i = 0; i < n; ++i)
    atoms.push_back({{u(rng), real_line ? 0.0 : u(rng)},
                     Rational(w[static_cast<std::size_t>(i)], total)});
  return AtomicMeasure(std::move(atoms), 5.0, 1e-12);
}

void check_marginals(const AtomicMeasure& mu, const AtomicMeasure& nu, const TransportPlan& plan) {
  std::vector<Rational> row(mu.size(), Rational(0)), col(nu.size(), Rational(0));
  for (const auto& e : plan.entries) {
    REQUIRE(e.source >= 0);
    REQUIRE(e.source < static_cast<int>(mu.size()));
    REQUIRE(e.target >= 0);
    REQUIRE(e.target < static_cast<int>(nu.size()));
    CHECK(e.mass > 0);
    row[static_cast<std::size_t>(e.source)] += e.mass;
    col[static_cast<std::size_t>(e.target)] += e.mass;
  }
  for (std::size_t i = 0; i < mu.size(); ++i) CHECK(row[i] == mu.atoms()[i].weight);
  for (std::size_t j = 0; j < nu.size(); ++j) CHECK(col[j] == nu.atoms()[j].weight);
}

}  // namespace

TEST_CASE("point masses: distance of the two atoms") {
  const auto a = AtomicMeasure::dirac({0, 0});
  const auto b = AtomicMeasure::dirac({3, 4});
  auto [d, plan] = w1_distance(a, b);
  CHECK(d == doctest::Approx(5.0).epsilon(1e-12));
  REQUIRE(plan.entries.size() == 1);
  CHECK(plan.entries[0].mass == 1);
  check_marginals(a, b, plan);
}

TEST_CASE("spec examples: dirac against two-point measures") {
  // delta_0 vs Delta(t^2-1): each half moves distance 1
  const auto mu = AtomicMeasure::dirac({0, 0});
  const auto nu = delta(P({-1, 0, 1}));
  CHECK(w1_distance(mu, nu).first == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(w1_distance(nu, mu).first == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("plan cost recomputes within 1e-12") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto mu = random_measure(rng, 12, false);
    const auto nu = random_measure(rng, 12, false);
    auto [d, plan] = w1_distance(mu, nu);
    double re = 0.0;
    for (const auto& e : plan.entries)
      re += e.mass.get_d() *
            std::abs(mu.atoms()[static_cast<std::size_t>(e.source)].location -
                     nu.atoms()[static_cast<std::size_t>(e.target)].location);
    CHECK(d == doctest::Approx(re).epsilon(1e-12));
    check_marginals(mu, nu, plan);
  }
}

TEST_CASE("real-supported measures match the sorted-quantile oracle") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto mu = random_measure(rng, 20, true);
    const auto nu = random_measure(rng, 20, true);
    const double lib = w1_distance(mu, nu).first;
    const double oracle = oracles::quantile_w1(mu, nu);
    CAPTURE(trial);
    CHECK(lib == doctest::Approx(oracle).epsilon(1e-10));
  }
}

TEST_CASE("metric axioms on random triples") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_measure(rng, 20, false);
    const auto b = random_measure(rng, 20, false);
    const auto c = random_measure(rng, 20, false);
    const double ab = w1_distance(a, b).first;
    const double ba = w1_distance(b, a).first;
    const double ac = w1_distance(a, c).first;
    const double cb = w1_distance(c, b).first;
    CHECK(std::abs(ab - ba) < 1e-10);
    CHECK(ab <= ac + cb + 1e-9);
  }
  // identity of indiscernibles
  std::mt19937 rng2(11);
  const auto m = random_measure(rng2, 10, false);
  CHECK(w1_distance(m, m).first < 1e-12);
}

TEST_CASE("degenerate weights exercise zero-mass pivots") {
  // many atoms, one tiny weight: forces degenerate northwest-corner cells
  std::vector<Atom> a, b;
  for (int i = 0; i < 8; ++i) a.push_back({{double(i), 0.0}, Rational(1, 8)});
  b.push_back({{0.5, 0.0}, Rational(7, 8)});
  b.push_back({{9.0, 0.0}, Rational(1, 8)});
  const AtomicMeasure mu(a, 10.0), nu(b, 10.0);
  auto [d, plan] = w1_distance(mu, nu);
  check_marginals(mu, nu, plan);
  CHECK(d == doctest::Approx(oracles::quantile_w1(mu, nu)).epsilon(1e-10));
}

TEST_CASE("kr dual: witnesses bound the distance from below") {
  const auto mu = AtomicMeasure::dirac({0, 0});
  const auto nu = AtomicMeasure::dirac({1, 0});
  // f(z) = Re z on the joint support {0, 1}
  LipschitzWitness re_z{{0.0, 1.0}};
  CHECK(kr_dual_bound(mu, nu, {re_z}) == doctest::Approx(1.0));  // dual optimal

  // f(z) = |z| on Delta(t^2-1) vs dirac_0
  const auto two = delta(P({-1, 0, 1}));
  LipschitzWitness abs_z{{1.0, 1.0, 0.0}};  // atoms at -1, 1, then dirac at 0
  CHECK(kr_dual_bound(two, mu, {abs_z}) == doctest::Approx(1.0));

  // constant witness: lower bound 0
  LipschitzWitness c{{5.0, 5.0}};
  CHECK(kr_dual_bound(mu, nu, {c}) == 0.0);
}

TEST_CASE("kr dual: violating witness is rejected with the offending pair") {
  const auto mu = AtomicMeasure::dirac({0, 0});
  const auto nu = AtomicMeasure::dirac({1, 0});
  LipschitzWitness bad{{0.0, 2.0}};  // slope 2 over distance 1
  CHECK_THROWS_AS(kr_dual_bound(mu, nu, {bad}), LipschitzViolation);
  try {
    kr_dual_bound(mu, nu, {bad});
  } catch (const LipschitzViolation& v) {
    CHECK(v.witness_index == 0);
    CHECK(v.point_a == 0);
    CHECK(v.point_b == 1);
  }
}

TEST_CASE("weak duality on random witnesses") {
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const auto mu = random_measure(rng, 10, false);
    const auto nu = random_measure(rng, 10, false);
    const double w1 = w1_distance(mu, nu).first;
    // 1-Lipschitz witnesses: distance to a random anchor (always valid)
    std::vector<std::complex<double>> support = mu.locations();
    auto nb = nu.locations();
    support.insert(support.end(), nb.begin(), nb.end());
    std::vector<LipschitzWitness> ws;
    for (int k = 0; k < 4; ++k) {
      const std::complex<double> anchor{u(rng) * 3, u(rng) * 3};
      LipschitzWitness w;
      for (const auto& s : support) w.values.push_back(std::abs(s - anchor));
      ws.push_back(std::move(w));
    }
    CHECK(kr_dual_bound(mu, nu, ws) <= w1 + 1e-9);
  }
}
