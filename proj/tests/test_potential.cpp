#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "intmeas/potential.hpp"
#include "oracles.hpp"

using namespace intmeas;

namespace {

IntPolynomial P(std::initializer_list<long> c) { return IntPolynomial(c); }

}  // namespace

TEST_CASE("shape constructors enforce the symmetry and validity invariants") {
  CHECK_THROWS_AS(CompactSetSpec::interval(2, -2), std::invalid_argument);
  CHECK_THROWS_AS(CompactSetSpec::circle(0), std::invalid_argument);
  CHECK_THROWS_AS(CompactSetSpec::lemniscate(P({-2, 0, 2}), 4), std::invalid_argument);  // non-monic
  CHECK_THROWS_AS(CompactSetSpec::lemniscate(P({-2, 0, 1}), 0), std::invalid_argument);
  // cloud must be conjugation-symmetric
  CHECK_THROWS_AS(CompactSetSpec::cloud({{0, 1}}), std::invalid_argument);
  CHECK_NOTHROW(CompactSetSpec::cloud({{0, 1}, {0, -1}, {2, 0}}));
}

TEST_CASE("green values: closed forms") {
  const auto lem = CompactSetSpec::lemniscate(P({0, 0, 1}), 4.0);  // |z^2| <= 4 = disk r 2
  const auto dsk = CompactSetSpec::disk(0, 2);
  CHECK(green_value(lem, {4, 0}) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(green_value(dsk, {4, 0}) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  // the two descriptions agree off the set
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  for (int i = 0; i < 200; ++i) {
    const std::complex<double> z{u(rng), u(rng)};
    CHECK(green_value(lem, z) == doctest::Approx(green_value(dsk, z)).epsilon(1e-10));
  }

  const auto seg = CompactSetSpec::interval(-2, 2);
  CHECK(green_value(seg, {3, 0}) == doctest::Approx(std::log((3 + std::sqrt(5.0)) / 2)).epsilon(1e-12));

  // z in E gives exactly zero
  CHECK(green_value(seg, {1.3, 0}) == 0.0);
  CHECK(green_value(dsk, {1, 1}) == 0.0);
  CHECK(green_value(CompactSetSpec::circle(1), {0.4, 0.2}) == 0.0);
  CHECK(green_value(lem, {1, 0.5}) == 0.0);

  CHECK_THROWS_AS(green_value(CompactSetSpec::cloud({{1, 0}}), {2, 0}), UnsupportedShape);
}

TEST_CASE("green is nonnegative, vanishes on a 1000-point sample of E") {
  const auto shapes = {CompactSetSpec::circle(1.5), CompactSetSpec::interval(-2, 2),
                       CompactSetSpec::disk(1, 1), CompactSetSpec::lemniscate(P({-2, 0, 1}), 4.0)};
  for (const auto& E : shapes) {
    for (const auto& z : E.discretization(1000)) {
      const double g = green_value(E, z);
      CHECK(g >= 0.0);
      CHECK(g <= 1e-9);  // boundary points: zero up to solver noise on lemniscates
    }
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-6.0, 6.0);
    for (int i = 0; i < 500; ++i) CHECK(green_value(E, {u(rng), u(rng)}) >= 0.0);
  }
}

TEST_CASE("green is discretely harmonic outside E") {
  const auto shapes = {CompactSetSpec::circle(1), CompactSetSpec::interval(-2, 2),
                       CompactSetSpec::lemniscate(P({-2, 0, 1}), 4.0)};
  const double h = 1e-3;
  for (const auto& E : shapes) {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> ang(0, 2 * M_PI);
    std::uniform_real_distribution<double> rad(1.5, 4.0);
    int checked = 0;
    for (int i = 0; i < 300 && checked < 100; ++i) {
      const double r = rad(rng) * E.modulus_bound();
      const std::complex<double> z = std::polar(r, ang(rng));
      if (green_value(E, z) <= 0) continue;
      ++checked;
      const double lap = (green_value(E, z + std::complex<double>(h, 0)) +
                          green_value(E, z - std::complex<double>(h, 0)) +
                          green_value(E, z + std::complex<double>(0, h)) +
                          green_value(E, z - std::complex<double>(0, h)) - 4 * green_value(E, z)) /
                         (h * h);
      CHECK(std::abs(lap) <= 1e-4);
    }
    CHECK(checked == 100);
  }
}

TEST_CASE("green growth at infinity recovers -log capacity") {
  const auto shapes = {CompactSetSpec::circle(1), CompactSetSpec::interval(-2, 2),
                       CompactSetSpec::disk(0, 2), CompactSetSpec::lemniscate(P({-2, 0, 1}), 4.0)};
  for (const auto& E : shapes) {
    const double cap = capacity_explicit(E).value;
    const std::complex<double> z{1e6, 3e5};
    CHECK(green_value(E, z) - std::log(std::abs(z)) ==
          doctest::Approx(-std::log(cap)).epsilon(1e-3));
  }
}

TEST_CASE("explicit capacities from the closed forms") {
  CHECK(capacity_explicit(CompactSetSpec::circle(1)).value == 1.0);
  CHECK(capacity_explicit(CompactSetSpec::interval(-2, 2)).value == 1.0);
  CHECK(capacity_explicit(CompactSetSpec::lemniscate(P({-2, 0, 1}), 4.0)).value ==
        doctest::Approx(2.0).epsilon(1e-14));
  CHECK(capacity_explicit(CompactSetSpec::disk(3, 0.5)).value == 0.5);
  CHECK(capacity_explicit(CompactSetSpec::interval(-1, 1)).value == 0.5);
  CHECK(capacity_explicit(CompactSetSpec::circle(1)).trend == 0.0);
  CHECK_THROWS_AS(capacity_explicit(CompactSetSpec::cloud({{1, 0}})), UnsupportedShape);
}

TEST_CASE("leja points: diameter pairs first") {
  const auto circ = CompactSetSpec::circle(1);
  const auto two = leja_points(circ, 2, 1000);
  CHECK(std::abs(two[0] - std::complex<double>(1, 0)) < 1e-12);
  CHECK(std::abs(two[1] - std::complex<double>(-1, 0)) < 1e-12);

  const auto seg = CompactSetSpec::interval(-2, 2);
  const auto ends = leja_points(seg, 2, 1001);
  CHECK(ends[0].real() == doctest::Approx(-2.0));
  CHECK(ends[1].real() == doctest::Approx(2.0));

  CHECK_THROWS_AS(leja_points(circ, 2000, 1000), std::invalid_argument);
}

TEST_CASE("leja 16 on the circle reaches the roots-of-unity energy") {
  // grid divisible by 16, so the greedy picks the exact 16th roots of unity
  const auto pts = leja_points(CompactSetSpec::circle(1), 16, 10000);
  double logsum = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      logsum += std::log(std::abs(pts[i] - pts[j]));
  const double optimum = 8.0 * std::log(16.0);  // log n^(n/2)
  CHECK(std::abs(logsum - optimum) <= std::log(1.03));
}

TEST_CASE("leja capacity estimates approach the closed forms") {
  const auto c = capacity_leja(CompactSetSpec::circle(1), 256, 10000);
  CHECK(c.value == doctest::Approx(1.0).epsilon(0.03));
  CHECK(c.method == CapacityEstimate::Method::leja);
  CHECK(c.n_points == 256);
  const auto i = capacity_leja(CompactSetSpec::interval(-2, 2), 256, 10000);
  CHECK(i.value == doctest::Approx(1.0).epsilon(0.03));
  const auto l = capacity_leja(CompactSetSpec::lemniscate(P({-2, 0, 1}), 4.0), 256, 10000);
  CHECK(l.value == doctest::Approx(2.0).epsilon(0.04));
}

TEST_CASE("leja capacity error decreases along n = 32, 64, 128, 256") {
  const auto shapes = {CompactSetSpec::circle(1), CompactSetSpec::interval(-2, 2),
                       CompactSetSpec::lemniscate(P({-2, 0, 1}), 4.0)};
  for (const auto& E : shapes) {
    const double cap = capacity_explicit(E).value;
    double prev = 1e9;
    for (int n : {32, 64, 128, 256}) {
      const double err = std::abs(capacity_leja(E, n, 10000).value - cap);
      CHECK(err <= prev + 1e-12);
      prev = err;
    }
  }
}

TEST_CASE("equilibrium discretizations") {
  // circle(1), n = 8: exactly the 8th roots of unity
  const auto mu = equilibrium_discretized(CompactSetSpec::circle(1), 8);
  const auto rts = find_roots(P({-1, 0, 0, 0, 0, 0, 0, 0, 1}), 1e-12);
  REQUIRE(mu.size() == 8);
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(std::abs(mu.atoms()[i].location - rts.entries[i].location) < 1e-12);
    CHECK(mu.atoms()[i].weight == Rational(1, 8));
  }

  // interval arcsine moments against the quadrature oracle
  const auto seg = equilibrium_discretized(CompactSetSpec::interval(-2, 2), 512);
  const auto m = moments(seg, 6);
  CHECK(m[1].real() == doctest::Approx(oracles::arcsine_moment(2)).epsilon(1e-4));
  CHECK(m[3].real() == doctest::Approx(oracles::arcsine_moment(4)).epsilon(1e-4));
  CHECK(m[5].real() == doctest::Approx(oracles::arcsine_moment(6)).epsilon(1e-4));
  CHECK(oracles::arcsine_moment(2) == doctest::Approx(2.0).epsilon(1e-8));
  CHECK(oracles::arcsine_moment(4) == doctest::Approx(6.0).epsilon(1e-8));
  CHECK(oracles::arcsine_moment(6) == doctest::Approx(20.0).epsilon(1e-8));

  // lemniscate |z^2| = 4: n = 8 angles -> 16 points on the radius-2 circle
  const auto lem = equilibrium_discretized(CompactSetSpec::lemniscate(P({0, 0, 1}), 4.0), 8);
  CHECK(lem.size() == 16);
  for (const auto& a : lem.atoms()) {
    CHECK(std::abs(std::abs(a.location) - 2.0) < 1e-9);
    CHECK(a.weight == Rational(1, 16));
  }
}

TEST_CASE("equilibrium offdiag energy approaches -log capacity") {
  const auto shapes = {CompactSetSpec::circle(1), CompactSetSpec::interval(-2, 2),
                       CompactSetSpec::lemniscate(P({-2, 0, 1}), 4.0)};
  for (const auto& E : shapes) {
    const double target = -std::log(capacity_explicit(E).value);
    const auto mu = equilibrium_discretized(E, 256);
    const double e = energy(mu, EnergyMode::offdiag).value;
    CHECK(std::abs(e - target) <= 0.05 * std::max(1.0, std::abs(target)));
  }
}

TEST_CASE("weil heights") {
  const auto unit = CompactSetSpec::disk(0, 1);
  CHECK(weil_height(unit, find_roots(P({-2, 1}), 1e-12)) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-12));
  // all roots inside E: exactly zero
  CHECK(weil_height(CompactSetSpec::disk(0, 2), find_roots(P({1, 1, 1}), 1e-12)) == 0.0);
  // interval [-2,2], t^2-5: log golden ratio
  CHECK(weil_height(CompactSetSpec::interval(-2, 2), find_roots(P({-5, 0, 1}), 1e-12)) ==
        doctest::Approx(std::log((std::sqrt(5.0) + 1) / 2)).epsilon(1e-10));
  CHECK(weil_height(unit, find_roots(P({-1, 0, 0, 0, 0, 0, 0, 0, 1}), 1e-12)) <= 1e-12);
}

TEST_CASE("interval green agrees with a large-n leja discrete potential") {
  // oracle: G(z) ~ (1/n) sum log|z - x_i| - log cap on leja points of E
  const auto seg = CompactSetSpec::interval(-2, 2);
  const auto pts = leja_points(seg, 400, 20000);
  auto discrete = [&](std::complex<double> z) {
    double s = 0;
    for (const auto& x : pts) s += std::log(std::abs(z - x));
    return s / double(pts.size()) - std::log(capacity_explicit(seg).value);
  };
  for (double x : {3.0, 4.0, -2.5}) {
    CHECK(green_value(seg, {x, 0}) == doctest::Approx(discrete({x, 0})).epsilon(0.02));
  }
  CHECK(green_value(seg, {0, 2}) == doctest::Approx(discrete({0, 2})).epsilon(0.02));
}
