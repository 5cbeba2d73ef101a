#include "ihara/kernels.hpp"

#include <numbers>

#include "ihara/zeta.hpp"

namespace ihara::kernels {

namespace {

using cplx = std::complex<double>;

void node_angles(std::size_t node, std::size_t m, std::size_t rank, std::vector<double>& theta) {
  theta.resize(rank);
  for (std::size_t d = rank; d-- > 0;) {
    theta[d] = 2.0 * std::numbers::pi * static_cast<double>(node % m) / static_cast<double>(m);
    node /= m;
  }
}

std::size_t node_count(std::size_t m, std::size_t rank) {
  std::size_t n = 1;
  for (std::size_t d = 0; d < rank; ++d) n *= m;
  return n;
}

cplx node_value(const TorusSymbol& sym, int q, cplx u, std::size_t node, std::size_t m,
                std::vector<double>& theta, std::vector<double>& eigs) {
  node_angles(node, m, sym.rank(), theta);
  eigs.clear();
  sym.eigenvalues(theta, eigs);
  return log_det_laplacian(eigs, q, u);
}

} // namespace

cplx pairwise_sum(std::span<const cplx> values) {
  if (values.size() <= 8) {
    cplx acc = 0.0;
    for (const auto& v : values) acc += v;
    return acc;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

cplx torus_log_det_sum_serial(const TorusSymbol& sym, int q, cplx u, std::size_t m) {
  const std::size_t nodes = node_count(m, sym.rank());
  std::vector<double> theta, eigs;
  cplx acc = 0.0;
  for (std::size_t t = 0; t < nodes; ++t) acc += node_value(sym, q, u, t, m, theta, eigs);
  return acc;
}

cplx torus_log_det_sum_parallel(const TorusSymbol& sym, int q, cplx u, std::size_t m) {
  const std::size_t nodes = node_count(m, sym.rank());
  const std::size_t blocks = (nodes + kReductionBlock - 1) / kReductionBlock;
  std::vector<cplx> block_sums(blocks);

#pragma omp parallel
  {
    std::vector<double> theta, eigs;
    std::vector<cplx> local(kReductionBlock);
#pragma omp for schedule(static)
    for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(blocks); ++b) {
      const std::size_t begin = static_cast<std::size_t>(b) * kReductionBlock;
      const std::size_t end = std::min(nodes, begin + kReductionBlock);
      for (std::size_t t = begin; t < end; ++t) local[t - begin] = node_value(sym, q, u, t, m, theta, eigs);
      block_sums[static_cast<std::size_t>(b)] = pairwise_sum(std::span<const cplx>(local.data(), end - begin));
    }
  }
  return pairwise_sum(block_sums);
}

cplx torus_log_det_sum(const TorusSymbol& sym, int q, cplx u, std::size_t m, Backend backend) {
  return backend == Backend::serial ? torus_log_det_sum_serial(sym, q, u, m)
                                    : torus_log_det_sum_parallel(sym, q, u, m);
}

std::vector<double> torus_eigenvalues(const TorusSymbol& sym, std::size_t m, Backend backend) {
  const std::size_t nodes = node_count(m, sym.rank());
  const std::size_t per_node = sym.base_vertex_count();
  std::vector<double> out(nodes * per_node);
  if (backend == Backend::serial) {
    std::vector<double> theta, eigs;
    for (std::size_t t = 0; t < nodes; ++t) {
      node_angles(t, m, sym.rank(), theta);
      eigs.clear();
      sym.eigenvalues(theta, eigs);
      std::copy(eigs.begin(), eigs.end(), out.begin() + static_cast<std::ptrdiff_t>(t * per_node));
    }
    return out;
  }
#pragma omp parallel
  {
    std::vector<double> theta, eigs;
#pragma omp for schedule(static)
    for (std::ptrdiff_t t = 0; t < static_cast<std::ptrdiff_t>(nodes); ++t) {
      node_angles(static_cast<std::size_t>(t), m, sym.rank(), theta);
      eigs.clear();
      sym.eigenvalues(theta, eigs);
      std::copy(eigs.begin(), eigs.end(), out.begin() + t * static_cast<std::ptrdiff_t>(per_node));
    }
  }
  return out;
}

std::vector<cplx> log_det_grid_serial(std::span<const double> eigenvalues, int q,
                                      std::span<const cplx> points) {
  std::vector<cplx> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) out[i] = log_det_laplacian(eigenvalues, q, points[i]);
  return out;
}

std::vector<cplx> log_det_grid_parallel(std::span<const double> eigenvalues, int q,
                                        std::span<const cplx> points) {
  std::vector<cplx> out(points.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(points.size()); ++i) {
    out[static_cast<std::size_t>(i)] = log_det_laplacian(eigenvalues, q, points[static_cast<std::size_t>(i)]);
  }
  return out;
}

std::vector<cplx> log_det_grid(std::span<const double> eigenvalues, int q, std::span<const cplx> points,
                               Backend backend) {
  return backend == Backend::serial ? log_det_grid_serial(eigenvalues, q, points)
                                    : log_det_grid_parallel(eigenvalues, q, points);
}

} // namespace ihara::kernels
