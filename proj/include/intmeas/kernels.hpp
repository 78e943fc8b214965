// Data-parallel inner loops shared by the numeric modules: pairwise
// log-distance accumulation, the weighted cross sum behind log disc, Aberth
// root-iteration sweeps and the Leja greedy scan. Each kernel has a plain
// serial reference implementation (kept for tests and the benchmark) and an
// OpenMP version. The OpenMP versions accumulate over fixed-size index blocks
// that are reduced in index order, so results are identical for any thread
// count.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace intmeas::kernels {

using Cplx = std::complex<double>;

// sum_{i<j} log |z_i - z_j|
double pairwise_log_abs_sum_serial(std::span<const Cplx> z);
double pairwise_log_abs_sum(std::span<const Cplx> z);

// sum over pairs with a_i != b_j (exact location inequality) of
// wa_i * wb_j * log |a_i - b_j|
double cross_log_abs_sum_serial(std::span<const Cplx> a, std::span<const double> wa,
                                std::span<const Cplx> b, std::span<const double> wb);
double cross_log_abs_sum(std::span<const Cplx> a, std::span<const double> wa,
                         std::span<const Cplx> b, std::span<const double> wb);

// One Jacobi sweep of the Aberth-Ehrlich iteration on a monic-normalized
// polynomial given by coeffs (ascending, complex). Writes the updated roots
// to out and returns the largest relative correction.
double aberth_sweep_serial(std::span<const std::complex<double>> coeffs,
                           std::span<const std::complex<double>> roots,
                           std::span<std::complex<double>> out);
double aberth_sweep(std::span<const std::complex<double>> coeffs,
                    std::span<const std::complex<double>> roots,
                    std::span<std::complex<double>> out);
double aberth_sweep_serial(std::span<const std::complex<long double>> coeffs,
                           std::span<const std::complex<long double>> roots,
                           std::span<std::complex<long double>> out);
double aberth_sweep(std::span<const std::complex<long double>> coeffs,
                    std::span<const std::complex<long double>> roots,
                    std::span<std::complex<long double>> out);

// Leja greedy step: add log |grid_c - last| to every candidate accumulator,
// then return the argmax (ties broken by the lowest candidate index).
std::size_t leja_step_serial(std::span<const Cplx> grid, std::span<double> acc, Cplx last);
std::size_t leja_step(std::span<const Cplx> grid, std::span<double> acc, Cplx last);

// Full Aberth solve of a complex-coefficient polynomial (uncertified; the
// certified integer pipeline lives in roots.cpp). Optional warm start.
std::vector<Cplx> aberth_roots(std::vector<Cplx> coeffs, double tol, int max_sweeps,
                               const std::vector<Cplx>* warm_start = nullptr);

}  // namespace intmeas::kernels
