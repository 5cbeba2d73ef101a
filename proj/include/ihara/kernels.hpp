#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "ihara/symbol.hpp"

namespace ihara {

enum class Backend { serial, parallel };

/// Data-parallel inner loops. Each kernel has a plain serial reference and an
/// OpenMP version. The OpenMP versions reduce in fixed blocks with pairwise
/// summation, so their results do not depend on the thread count.
namespace kernels {

inline constexpr std::size_t kReductionBlock = 1024;

/// Sum over the uniform M^k torus grid of sum_j log(1 - lambda_j(theta) u + q u^2).
std::complex<double> torus_log_det_sum_serial(const TorusSymbol& sym, int q, std::complex<double> u,
                                              std::size_t m);
std::complex<double> torus_log_det_sum_parallel(const TorusSymbol& sym, int q, std::complex<double> u,
                                                std::size_t m);
std::complex<double> torus_log_det_sum(const TorusSymbol& sym, int q, std::complex<double> u,
                                       std::size_t m, Backend backend);

/// All eigenvalues of the symbol over the M^k grid, node-major.
std::vector<double> torus_eigenvalues(const TorusSymbol& sym, std::size_t m, Backend backend);

/// log_det_laplacian(eigenvalues, q, u) for every u in `points`.
std::vector<std::complex<double>> log_det_grid_serial(std::span<const double> eigenvalues, int q,
                                                      std::span<const std::complex<double>> points);
std::vector<std::complex<double>> log_det_grid_parallel(std::span<const double> eigenvalues, int q,
                                                        std::span<const std::complex<double>> points);
std::vector<std::complex<double>> log_det_grid(std::span<const double> eigenvalues, int q,
                                               std::span<const std::complex<double>> points,
                                               Backend backend);

/// Pairwise (cascade) summation in index order.
std::complex<double> pairwise_sum(std::span<const std::complex<double>> values);

} // namespace kernels
} // namespace ihara
