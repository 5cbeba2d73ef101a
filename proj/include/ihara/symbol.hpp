#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ihara/covers.hpp"
#include "ihara/graph.hpp"

namespace ihara {

struct SymbolTerm {
  long coefficient = 0;
  std::vector<long> frequency;
};

/// Fourier symbol of the adjacency operator of a Z^k-cover:
///   A(theta)_{xy} = sum coefficient * exp(i theta . frequency).
/// Hermitian for every theta; at theta = 0 it is the base adjacency matrix.
class TorusSymbol {
public:
  TorusSymbol(std::size_t base_vertex_count, std::size_t rank);

  std::size_t base_vertex_count() const { return n_; }
  std::size_t rank() const { return rank_; }
  const std::vector<SymbolTerm>& entry(std::size_t x, std::size_t y) const { return entries_[x * n_ + y]; }
  void add_term(std::size_t x, std::size_t y, long coefficient, std::vector<long> frequency);

  Eigen::MatrixXcd evaluate(std::span<const double> theta) const;
  /// Eigenvalues of A(theta), ascending, appended to `out`.
  void eigenvalues(std::span<const double> theta, std::vector<double>& out) const;

private:
  std::size_t n_;
  std::size_t rank_;
  std::vector<std::vector<SymbolTerm>> entries_;
};

/// Symbol of the derived Z^k-cover: each edge x -> y with voltage s adds
/// exp(i theta.s) at (x,y) and exp(-i theta.s) at (y,x); a loop adds both to
/// (x,x). Requires a free group (all orders 0).
TorusSymbol torus_symbol(const MultiGraph& base, const VoltageAssignment& volt);

} // namespace ihara
