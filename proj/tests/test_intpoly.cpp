#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "intmeas/intpoly.hpp"
#include "intmeas/polytext.hpp"
#include "oracles.hpp"

using namespace intmeas;

namespace {

IntPolynomial P(std::initializer_list<long> c) { return IntPolynomial(c); }

// |expected - prod over numeric roots| / |expected|, the spec's cross-check
double rel_err_against_root_product(const IntPolynomial& p, const BigInt& det_value) {
  auto roots = oracles::durand_kerner(p);
  std::complex<double> prod = 1.0;
  for (const auto& z : roots)
    if (std::abs(z) > 1e-9) prod *= z;
  const double expect = det_value.get_d();
  return std::abs(prod.real() - expect) / std::max(1.0, std::abs(expect));
}

}  // namespace

TEST_CASE("construction normalizes and rejects the zero polynomial") {
  CHECK(P({-2, 0, 1}).degree() == 2);
  CHECK(P({-2, 0, 1}).monic());
  CHECK(P({-2, 0, 1, 0, 0}).degree() == 2);  // trailing zeros trimmed
  CHECK(P({0, 0, 1}).degree() == 2);
  CHECK(P({2, 512, 0, 0, 0, 0, 1}).monic());
  CHECK(!P({1, 2}).monic());
  CHECK_THROWS_AS(IntPolynomial(std::vector<BigInt>{}), std::invalid_argument);
  CHECK_THROWS_AS(P({0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(P({0}), std::invalid_argument);
}

TEST_CASE("ring operations") {
  const auto t = IntPolynomial::variable();
  CHECK(mul(P({-1, 1}), P({1, 1})) == P({-1, 0, 1}));          // (t-1)(t+1)
  CHECK(pow(P({-2, 0, 1}), 2) == P({4, 0, -4, 0, 1}));         // (t^2-2)^2
  CHECK(compose(P({0, 0, 1}), P({1, 1})) == P({1, 2, 1}));     // (t+1)^2
  CHECK(add(P({1, 1}), P({1, 1})) == P({2, 2}));
  CHECK_THROWS_AS(add(P({1, 1}), P({-1, -1})), std::invalid_argument);  // p + (-p)
  CHECK(derivative(P({4, 0, -4, 0, 1})) == P({0, -8, 0, 4}));
  CHECK(taylor_shift(P({0, 0, 1}), BigInt(1)) == P({1, 2, 1}));
  CHECK(mul(t, t).degree() == 2);
  // degree additive under mul
  CHECK(mul(P({1, 2, 3, 4}), P({5, 6, 7})).degree() == 5);
}

TEST_CASE("squarefree part") {
  CHECK(squarefree_part(P({4, 0, -4, 0, 1})) == P({-2, 0, 1}));  // (t^2-2)^2 -> t^2-2
  CHECK(squarefree_part(P({-2, 0, 1})) == P({-2, 0, 1}));
  CHECK(squarefree_part(P({0, 0, 0, 1})) == P({0, 1}));  // t^3 -> t
  // the square of the part divides the input for a perfect square
  auto part = squarefree_part(P({4, 0, -4, 0, 1}));
  CHECK(divide_exact(P({4, 0, -4, 0, 1}), mul(part, part)).has_value());
}

TEST_CASE("squarefree decomposition recovers multiplicities") {
  // (t^2-2)^2 * (t-1) * t^3
  auto p = mul(mul(pow(P({-2, 0, 1}), 2), P({-1, 1})), pow(IntPolynomial::variable(), 3));
  auto dec = squarefree_decomposition(p);
  int total = 0;
  for (const auto& [f, m] : dec) total += f.degree() * m;
  CHECK(total == p.degree());
  bool saw_sq = false;
  for (const auto& [f, m] : dec)
    if (m == 2) {
      CHECK(f == P({-2, 0, 1}));
      saw_sq = true;
    }
  CHECK(saw_sq);
}

TEST_CASE("det strips the exact power of t") {
  CHECK(det_poly(P({-2, 0, 1})).value == -2);
  CHECK(det_poly(P({0, -2, 0, 1})).value == -2);  // t^3-2t
  CHECK(det_poly(P({0, 0, 0, 1})).value == 1);    // t^3, empty product
  CHECK_THROWS_AS(det_poly(P({1, 2})), std::invalid_argument);
}

TEST_CASE("disc is the ordered-pair product over distinct roots") {
  CHECK(disc_poly(P({-2, 0, 1})).value == -8);
  CHECK(disc_poly(P({-1, 0, 0, 1})).value == 27);
  CHECK(disc_poly(P({-5, 1})).value == 1);  // no pairs
  // repeated roots go through the squarefree part
  CHECK(disc_poly(P({4, 0, -4, 0, 1})).value == disc_poly(P({-2, 0, 1})).value);
  CHECK_THROWS_AS(disc_poly(P({1, 2})), std::invalid_argument);
}

TEST_CASE("resultant agrees with the Sylvester determinant oracle") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> dd(1, 5);
    auto p = oracles::random_monic(rng, dd(rng), 4);
    auto q = oracles::random_monic(rng, dd(rng), 4);
    CAPTURE(to_string(p));
    CAPTURE(to_string(q));
    CHECK(resultant(p, q) == oracles::sylvester_resultant(p, q));
  }
  // non-monic inputs too
  CHECK(resultant(P({-2, 0, 1}), P({0, 2})) == oracles::sylvester_resultant(P({-2, 0, 1}), P({0, 2})));
  CHECK(resultant(P({1, -3}), P({2, 5})) == oracles::sylvester_resultant(P({1, -3}), P({2, 5})));
}

TEST_CASE("resultant is multiplicative in each slot") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = oracles::random_monic(rng, 2, 3);
    auto b = oracles::random_monic(rng, 3, 3);
    auto c = oracles::random_monic(rng, 2, 3);
    CHECK(resultant(a, mul(b, c)) == resultant(a, b) * resultant(a, c));
    CHECK(resultant(mul(b, c), a) == resultant(b, a) * resultant(c, a));
  }
}

TEST_CASE("det and disc match numeric root products (degree <= 12)") {
  std::mt19937 rng(21);
  std::uniform_int_distribution<int> dd(2, 12);
  int done = 0;
  for (int trial = 0; trial < 400 && done < 60; ++trial) {
    auto p = oracles::random_monic(rng, dd(rng), 10);
    if (p.coeff(0) == 0) continue;  // keep the det product over all roots
    auto roots = oracles::durand_kerner(p);
    // skip badly conditioned instances the naive oracle cannot resolve
    double min_sep = 1e9;
    for (std::size_t i = 0; i < roots.size(); ++i)
      for (std::size_t j = i + 1; j < roots.size(); ++j)
        min_sep = std::min(min_sep, std::abs(roots[i] - roots[j]));
    if (min_sep < 1e-3) continue;
    ++done;
    CAPTURE(to_string(p));
    CHECK(rel_err_against_root_product(p, det_poly(p).value) < 1e-9);
    // disc: ordered-pair product over the numeric roots
    std::complex<double> dp = 1.0;
    for (std::size_t i = 0; i < roots.size(); ++i)
      for (std::size_t j = 0; j < roots.size(); ++j)
        if (i != j) dp *= roots[i] - roots[j];
    const double expect = disc_poly(p).value.get_d();
    CHECK(std::abs(dp.real() - expect) <= 1e-9 * std::max(1.0, std::abs(expect)));
  }
  CHECK(done >= 40);
}

TEST_CASE("composed difference: spec examples") {
  CHECK(composed_difference(P({-1, 1}), P({-1, 1})) == P({0, 1}));         // (t-1, t-1) -> t
  CHECK(composed_difference(P({-2, 0, 1}), P({-2, 0, 1})) == P({0, 0, -8, 0, 1}));  // t^4-8t^2
  CHECK(composed_difference(P({-2, 0, 1}), P({0, 1})) == P({-2, 0, 1}));
}

TEST_CASE("composed difference matches pairwise numeric differences") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> dd(1, 5);
  for (int trial = 0; trial < 40; ++trial) {
    auto p = oracles::random_monic(rng, dd(rng), 3);
    auto q = oracles::random_monic(rng, dd(rng), 3);
    auto r = composed_difference(p, q);
    CHECK(r.degree() == p.degree() * q.degree());
    CHECK(r.monic());
    auto rp = oracles::durand_kerner(p);
    auto rq = oracles::durand_kerner(q);
    // evaluate r at each difference: should be ~0
    for (const auto& a : rp)
      for (const auto& b : rq) {
        std::complex<double> v = 0.0;
        for (int k = r.degree(); k >= 0; --k) v = v * (a - b) + r.coeff(k).get_d();
        CHECK(std::abs(v) < 1e-5 * std::pow(4.0 + std::abs(a - b), r.degree()));
      }
  }
}

TEST_CASE("sturm counts distinct real roots in a closed interval") {
  CHECK(sturm_count_closed(P({-2, 0, 1}), Rational(-2), Rational(2)) == 2);   // +-sqrt2
  CHECK(sturm_count_closed(P({-2, 0, 1}), Rational(0), Rational(2)) == 1);
  CHECK(sturm_count_closed(P({-1, 1}), Rational(-1), Rational(1)) == 1);      // root at endpoint b
  CHECK(sturm_count_closed(P({1, 1}), Rational(-1), Rational(1)) == 1);       // root at endpoint a
  CHECK(sturm_count_closed(P({1, 0, 1}), Rational(-9), Rational(9)) == 0);    // t^2+1
  CHECK(sturm_count_closed(P({0, 1}), Rational(-1), Rational(1)) == 1);
  // t^3 - 3t + 1: three real roots in [-2, 2]
  CHECK(sturm_count_closed(P({1, -3, 0, 1}), Rational(-2), Rational(2)) == 3);
}

TEST_CASE("polynomial text grammar round trips") {
  CHECK(parse_poly("t^2-2") == P({-2, 0, 1}));
  CHECK(parse_poly("3t^2+t-1") == P({-1, 1, 3}));
  CHECK(parse_poly("-t^3 + 2t") == P({0, 2, 0, -1}));
  CHECK(parse_poly("7") == P({7}));
  CHECK(parse_poly("t") == P({0, 1}));
  CHECK(parse_poly("t^6+512t+2") == P({2, 512, 0, 0, 0, 0, 1}));
  CHECK(parse_poly(to_string(P({-1, 1, 3}))) == P({-1, 1, 3}));
  CHECK(to_string(P({-2, 0, 1})) == "t^2-2");
  CHECK_THROWS_AS(parse_poly("t^"), PolyParseError);
  CHECK_THROWS_AS(parse_poly("x^2"), PolyParseError);
  CHECK_THROWS_AS(parse_poly("0"), PolyParseError);
  CHECK_THROWS_AS(parse_poly(""), PolyParseError);
}
