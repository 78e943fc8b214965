// Independent oracles used by the unit and acceptance suites. Everything here
// recomputes expected values through a different route than the library code
// under test: numeric root products for the exact invariants, Sylvester
// determinants for resultants, sorted-quantile matching for 1-D transport,
// quadrature for the arcsine moments.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "intmeas/intpoly.hpp"
#include "intmeas/measure.hpp"

namespace oracles {

using intmeas::AtomicMeasure;
using intmeas::BigInt;
using intmeas::IntPolynomial;
using intmeas::Rational;

// Res(p, q) as the Bareiss fraction-free determinant of the Sylvester matrix.
inline BigInt sylvester_resultant(const IntPolynomial& p, const IntPolynomial& q) {
  const int n = p.degree(), m = q.degree();
  if (n == 0 && m == 0) return 1;
  if (n == 0) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), p.coeff(0).get_mpz_t(), static_cast<unsigned long>(m));
    return r;
  }
  if (m == 0) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), q.coeff(0).get_mpz_t(), static_cast<unsigned long>(n));
    return r;
  }
  const int N = n + m;
  std::vector<std::vector<BigInt>> a(static_cast<std::size_t>(N),
                                     std::vector<BigInt>(static_cast<std::size_t>(N), BigInt(0)));
  for (int row = 0; row < m; ++row)
    for (int k = 0; k <= n; ++k) a[row][row + (n - k)] = p.coeff(k);
  for (int row = 0; row < n; ++row)
    for (int k = 0; k <= m; ++k) a[m + row][row + (m - k)] = q.coeff(k);
  // Bareiss elimination with column pivoting; track the sign of row swaps.
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < N - 1; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < N; ++r)
        if (a[r][k] != 0) {
          swap_row = r;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(a[static_cast<std::size_t>(k)], a[static_cast<std::size_t>(swap_row)]);
      sign = -sign;
    }
    for (int i = k + 1; i < N; ++i)
      for (int j = k + 1; j < N; ++j) {
        BigInt v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a[k][k];
  }
  return sign > 0 ? a[N - 1][N - 1] : BigInt(-a[N - 1][N - 1]);
}

// naive root finding for low degrees via the library-independent
// Durand-Kerner iteration (different update rule than the Aberth solver)
inline std::vector<std::complex<double>> durand_kerner(const IntPolynomial& p, int iters = 2000) {
  const int n = p.degree();
  std::vector<std::complex<double>> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = p.coeff(k).get_d();
  for (auto& v : c) v /= c.back();
  std::vector<std::complex<double>> z(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    z[static_cast<std::size_t>(i)] = std::polar(1.3, 2.0 * M_PI * i / n + 0.5);
  auto eval = [&](std::complex<double> x) {
    std::complex<double> r = 0;
    for (int k = n; k >= 0; --k) r = r * x + c[static_cast<std::size_t>(k)];
    return r;
  };
  for (int it = 0; it < iters; ++it) {
    double worst = 0;
    for (int i = 0; i < n; ++i) {
      std::complex<double> d = 1.0;
      for (int j = 0; j < n; ++j)
        if (j != i) d *= z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
      if (d == std::complex<double>(0.0)) d = 1e-30;
      const auto corr = eval(z[static_cast<std::size_t>(i)]) / d;
      z[static_cast<std::size_t>(i)] -= corr;
      worst = std::max(worst, std::abs(corr));
    }
    if (worst < 1e-14) break;
  }
  return z;
}

// 1-D W1 by sorted-quantile matching with exact rational mass bookkeeping.
inline double quantile_w1(const AtomicMeasure& mu, const AtomicMeasure& nu) {
  struct Q {
    double x;
    Rational w;
  };
  auto line = [](const AtomicMeasure& m) {
    std::vector<Q> q;
    for (const auto& a : m.atoms()) q.push_back({a.location.real(), a.weight});
    std::sort(q.begin(), q.end(), [](const Q& l, const Q& r) { return l.x < r.x; });
    return q;
  };
  auto A = line(mu), B = line(nu);
  std::size_t i = 0, j = 0;
  Rational ra = A[0].w, rb = B[0].w;
  double cost = 0;
  while (true) {
    const Rational m = std::min(ra, rb);
    cost += m.get_d() * std::abs(A[i].x - B[j].x);
    ra -= m;
    rb -= m;
    if (ra == 0) {
      if (++i == A.size()) break;
      ra = A[i].w;
    }
    if (rb == 0) {
      if (++j == B.size()) break;
      rb = B[j].w;
    }
  }
  return cost;
}

// integral of f over [a, b] by composite Simpson
template <typename F>
double simpson(F&& f, double a, double b, int n = 4000) {
  if (n % 2) ++n;
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

// k-th moment of the arcsine law on [-2, 2] through the cosine substitution:
// (1/pi) \int_0^pi (2 cos u)^k du
inline double arcsine_moment(int k) {
  return simpson([k](double u) { return std::pow(2.0 * std::cos(u), k); }, 0.0, M_PI) / M_PI;
}

// deterministic random monic polynomial with coefficients in [-bound, bound]
inline IntPolynomial random_monic(std::mt19937& rng, int degree, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  std::vector<BigInt> c(static_cast<std::size_t>(degree) + 1);
  for (int k = 0; k < degree; ++k) c[static_cast<std::size_t>(k)] = d(rng);
  c[static_cast<std::size_t>(degree)] = 1;
  return IntPolynomial(std::move(c));
}

}  // namespace oracles
