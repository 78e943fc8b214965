// Serial-vs-OpenMP timing for the hot kernels. Each row reports the best of
// three runs and the resulting speedup.

#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "intmeas/kernels.hpp"

using intmeas::kernels::Cplx;

namespace {

template <typename F>
double time_best_ms(F&& f) {
  double best = 1e300;
  for (int rep = 0; rep < 3; ++rep) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

std::vector<Cplx> random_points(std::size_t n, std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<Cplx> z(n);
  for (auto& v : z) v = {u(rng), u(rng)};
  return z;
}

}  // namespace

int main() {
  std::mt19937 rng(12345);
  std::printf("threads available: %d\n\n", omp_get_max_threads());
  std::printf("%-28s %10s %12s %12s %9s\n", "kernel", "size", "serial ms", "openmp ms", "speedup");

  volatile double sink = 0.0;

  for (std::size_t n : {2000u, 4000u, 8000u}) {
    auto z = random_points(n, rng);
    double t_s = time_best_ms([&] { sink = intmeas::kernels::pairwise_log_abs_sum_serial(z); });
    double t_p = time_best_ms([&] { sink = intmeas::kernels::pairwise_log_abs_sum(z); });
    std::printf("%-28s %10zu %12.2f %12.2f %8.2fx\n", "pairwise_log_abs_sum", n, t_s, t_p,
                t_s / t_p);
  }

  for (std::size_t n : {1000u, 2000u}) {
    auto a = random_points(n, rng);
    auto b = random_points(n, rng);
    std::vector<double> wa(n, 1.0 / double(n)), wb(n, 1.0 / double(n));
    double t_s =
        time_best_ms([&] { sink = intmeas::kernels::cross_log_abs_sum_serial(a, wa, b, wb); });
    double t_p = time_best_ms([&] { sink = intmeas::kernels::cross_log_abs_sum(a, wa, b, wb); });
    std::printf("%-28s %10zu %12.2f %12.2f %8.2fx\n", "cross_log_abs_sum", n, t_s, t_p, t_s / t_p);
  }

  for (std::size_t deg : {256u, 512u}) {
    // coefficients of prod (t - z_i) would overflow; random coefficients are
    // just as good for timing a sweep
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Cplx> coeffs(deg + 1);
    for (auto& c : coeffs) c = {u(rng), u(rng)};
    coeffs.back() = 1.0;
    auto z = random_points(deg, rng);
    std::vector<Cplx> out(deg);
    double t_s = time_best_ms([&] {
      for (int it = 0; it < 20; ++it)
        sink = intmeas::kernels::aberth_sweep_serial(std::span<const Cplx>(coeffs),
                                                     std::span<const Cplx>(z), std::span<Cplx>(out));
    });
    double t_p = time_best_ms([&] {
      for (int it = 0; it < 20; ++it)
        sink = intmeas::kernels::aberth_sweep(std::span<const Cplx>(coeffs),
                                              std::span<const Cplx>(z), std::span<Cplx>(out));
    });
    std::printf("%-28s %10zu %12.2f %12.2f %8.2fx\n", "aberth_sweep x20", deg, t_s, t_p, t_s / t_p);
  }

  for (std::size_t g : {100000u, 400000u}) {
    auto grid = random_points(g, rng);
    std::vector<double> acc_s(g, 0.0), acc_p(g, 0.0);
    double t_s = time_best_ms([&] {
      std::fill(acc_s.begin(), acc_s.end(), 0.0);
      std::size_t pick = 0;
      for (int step = 0; step < 32; ++step)
        pick = intmeas::kernels::leja_step_serial(grid, acc_s, grid[pick]);
      sink = double(pick);
    });
    double t_p = time_best_ms([&] {
      std::fill(acc_p.begin(), acc_p.end(), 0.0);
      std::size_t pick = 0;
      for (int step = 0; step < 32; ++step) pick = intmeas::kernels::leja_step(grid, acc_p, grid[pick]);
      sink = double(pick);
    });
    std::printf("%-28s %10zu %12.2f %12.2f %8.2fx\n", "leja_step x32", g, t_s, t_p, t_s / t_p);
  }

  (void)sink;
  return 0;
}
