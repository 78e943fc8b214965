#include "intmeas/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace intmeas::kernels {

namespace {

constexpr std::size_t kBlock = 1024;

// Row-blocked parallel sum: partial[i] is accumulated serially in index order,
// then the partials are reduced in index order. The result is independent of
// the schedule and thread count; interleaved chunks balance triangular loads.
template <typename RowFn>
double blocked_row_sum(std::size_t rows, RowFn&& row) {
  std::vector<double> partial(rows, 0.0);
#pragma omp parallel for schedule(static, 16)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(rows); ++i)
    partial[static_cast<std::size_t>(i)] = row(static_cast<std::size_t>(i));
  double s = 0.0;
  for (double v : partial) s += v;
  return s;
}

template <typename T>
std::complex<T> horner(std::span<const std::complex<T>> c, std::complex<T> z) {
  std::complex<T> r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * z + *it;
  return r;
}

template <typename T>
std::complex<T> horner_deriv(std::span<const std::complex<T>> c, std::complex<T> z) {
  std::complex<T> r = 0;
  for (std::size_t k = c.size() - 1; k >= 1; --k)
    r = r * z + std::complex<T>(static_cast<T>(k)) * c[k];
  return r;
}

template <typename T>
double aberth_update_one(std::span<const std::complex<T>> coeffs,
                         std::span<const std::complex<T>> roots, std::size_t i,
                         std::complex<T>& out) {
  using C = std::complex<T>;
  const C z = roots[i];
  const C fz = horner(coeffs, z);
  C fpz = horner_deriv(coeffs, z);
  if (fz == C(0)) {
    out = z;
    return 0.0;
  }
  if (fpz == C(0)) fpz = C(std::numeric_limits<T>::min() * 1048576);
  const C w = fz / fpz;  // Newton correction
  C interference = 0;
  for (std::size_t j = 0; j < roots.size(); ++j) {
    if (j == i) continue;
    C d = z - roots[j];
    if (d == C(0)) d = C(std::numeric_limits<T>::epsilon()) * (C(1) + std::abs(z));
    interference += C(1) / d;
  }
  C denom = C(1) - w * interference;
  C corr = (denom == C(0)) ? w : w / denom;
  out = z - corr;
  const double scale = static_cast<double>(std::abs(z)) + 1.0;
  return static_cast<double>(std::abs(corr)) / scale;
}

template <typename T>
double aberth_sweep_serial_impl(std::span<const std::complex<T>> coeffs,
                                std::span<const std::complex<T>> roots,
                                std::span<std::complex<T>> out) {
  double worst = 0.0;
  for (std::size_t i = 0; i < roots.size(); ++i)
    worst = std::max(worst, aberth_update_one(coeffs, roots, i, out[i]));
  return worst;
}

template <typename T>
double aberth_sweep_impl(std::span<const std::complex<T>> coeffs,
                         std::span<const std::complex<T>> roots,
                         std::span<std::complex<T>> out) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(roots.size());
  std::vector<double> corr(roots.size(), 0.0);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    corr[static_cast<std::size_t>(i)] =
        aberth_update_one(coeffs, roots, static_cast<std::size_t>(i), out[static_cast<std::size_t>(i)]);
  double worst = 0.0;
  for (double v : corr) worst = std::max(worst, v);
  return worst;
}

}  // namespace

double pairwise_log_abs_sum_serial(std::span<const Cplx> z) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < z.size(); ++i)
    for (std::size_t j = i + 1; j < z.size(); ++j) s += std::log(std::abs(z[i] - z[j]));
  return s;
}

double pairwise_log_abs_sum(std::span<const Cplx> z) {
  if (z.size() < 2) return 0.0;
  return blocked_row_sum(z.size() - 1, [&](std::size_t i) {
    double s = 0.0;
    for (std::size_t j = i + 1; j < z.size(); ++j) s += std::log(std::abs(z[i] - z[j]));
    return s;
  });
}

double cross_log_abs_sum_serial(std::span<const Cplx> a, std::span<const double> wa,
                                std::span<const Cplx> b, std::span<const double> wb) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (a[i] == b[j]) continue;
      row += wb[j] * std::log(std::abs(a[i] - b[j]));
    }
    s += wa[i] * row;
  }
  return s;
}

double cross_log_abs_sum(std::span<const Cplx> a, std::span<const double> wa,
                         std::span<const Cplx> b, std::span<const double> wb) {
  if (a.empty() || b.empty()) return 0.0;
  return blocked_row_sum(a.size(), [&](std::size_t i) {
    double row = 0.0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (a[i] == b[j]) continue;
      row += wb[j] * std::log(std::abs(a[i] - b[j]));
    }
    return wa[i] * row;
  });
}

double aberth_sweep_serial(std::span<const std::complex<double>> coeffs,
                           std::span<const std::complex<double>> roots,
                           std::span<std::complex<double>> out) {
  return aberth_sweep_serial_impl(coeffs, roots, out);
}
double aberth_sweep(std::span<const std::complex<double>> coeffs,
                    std::span<const std::complex<double>> roots,
                    std::span<std::complex<double>> out) {
  return aberth_sweep_impl(coeffs, roots, out);
}
double aberth_sweep_serial(std::span<const std::complex<long double>> coeffs,
                           std::span<const std::complex<long double>> roots,
                           std::span<std::complex<long double>> out) {
  return aberth_sweep_serial_impl(coeffs, roots, out);
}
double aberth_sweep(std::span<const std::complex<long double>> coeffs,
                    std::span<const std::complex<long double>> roots,
                    std::span<std::complex<long double>> out) {
  return aberth_sweep_impl(coeffs, roots, out);
}

std::size_t leja_step_serial(std::span<const Cplx> grid, std::span<double> acc, Cplx last) {
  std::size_t best = 0;
  double best_v = -std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < grid.size(); ++c) {
    acc[c] += std::log(std::abs(grid[c] - last));
    if (acc[c] > best_v) {
      best_v = acc[c];
      best = c;
    }
  }
  return best;
}

std::size_t leja_step(std::span<const Cplx> grid, std::span<double> acc, Cplx last) {
  const std::size_t n = grid.size();
  const std::size_t nb = (n + kBlock - 1) / kBlock;
  std::vector<std::pair<double, std::size_t>> best(nb);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(nb); ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * kBlock;
    const std::size_t hi = std::min(lo + kBlock, n);
    double bv = -std::numeric_limits<double>::infinity();
    std::size_t bi = lo;
    for (std::size_t c = lo; c < hi; ++c) {
      acc[c] += std::log(std::abs(grid[c] - last));
      if (acc[c] > bv) {
        bv = acc[c];
        bi = c;
      }
    }
    best[static_cast<std::size_t>(b)] = {bv, bi};
  }
  double bv = -std::numeric_limits<double>::infinity();
  std::size_t bi = 0;
  for (const auto& [v, i] : best) {
    if (v > bv) {
      bv = v;
      bi = i;
    }
  }
  return bi;
}

std::vector<Cplx> aberth_roots(std::vector<Cplx> coeffs, double tol, int max_sweeps,
                               const std::vector<Cplx>* warm_start) {
  if (coeffs.size() < 2) throw std::invalid_argument("aberth_roots: degree must be >= 1");
  const std::size_t n = coeffs.size() - 1;
  // monic normalization
  const Cplx lead = coeffs.back();
  for (auto& c : coeffs) c /= lead;
  std::vector<Cplx> z(n);
  if (warm_start && warm_start->size() == n) {
    z = *warm_start;
  } else {
    // Newton-polygon initial moduli (upper convex hull of (k, log|a_k|)).
    std::vector<std::pair<double, std::size_t>> pts;
    for (std::size_t k = 0; k <= n; ++k) {
      double m = std::abs(coeffs[k]);
      pts.emplace_back(m > 0 ? std::log(m) : -1e300, k);
    }
    std::vector<std::size_t> hull;  // indices, increasing k, upper hull
    for (std::size_t k = 0; k <= n; ++k) {
      if (pts[k].first <= -1e299 && k != 0 && k != n) continue;
      while (hull.size() >= 2) {
        std::size_t a = hull[hull.size() - 2], b = hull[hull.size() - 1];
        double cross = (pts[b].first - pts[a].first) * (double(k) - double(a)) -
                       (pts[k].first - pts[a].first) * (double(b) - double(a));
        if (cross <= 0)
          hull.pop_back();
        else
          break;
      }
      hull.push_back(k);
    }
    std::size_t idx = 0;
    for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
      std::size_t k1 = hull[s], k2 = hull[s + 1];
      double u = std::exp((pts[k1].first - pts[k2].first) / double(k2 - k1));
      if (!std::isfinite(u) || u <= 0) u = 1.0;
      for (std::size_t j = k1; j < k2; ++j) {
        double ang = 2.0 * M_PI * (double(idx) / double(n)) + 0.7 + 0.27 * double(s);
        z[idx++] = std::polar(u, ang);
      }
    }
    while (idx < n) z[idx++] = std::polar(1.0, 2.0 * M_PI * double(idx) / double(n) + 0.7);
  }
  std::vector<Cplx> z2(n);
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double worst = aberth_sweep(std::span<const Cplx>(coeffs), std::span<const Cplx>(z),
                                std::span<Cplx>(z2));
    z.swap(z2);
    if (worst < tol) break;
  }
  return z;
}

}  // namespace intmeas::kernels
