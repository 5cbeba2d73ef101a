#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ihara/covers.hpp"
#include "ihara/graph.hpp"
#include "ihara/kernels.hpp"
#include "ihara/polynomial.hpp"
#include "ihara/symbol.hpp"

namespace ihara {

/// Right-continuous eigenvalue-counting function F(lambda) = #{mu <= lambda} / N.
struct SpectralCDF {
  std::vector<double> jump_points; // strictly increasing
  std::vector<double> values;      // F at each jump point
  std::size_t normalization = 1;

  double operator()(double lambda) const;
  double mass() const { return values.empty() ? 0.0 : values.back(); }
};

/// Eigenvalues closer than 1e-9 (relative to max(1,|lambda|)) share a jump.
SpectralCDF empirical_cdf(std::span<const double> eigenvalues, std::size_t n);
SpectralCDF empirical_cdf(const SpectrumData& s, std::size_t n);

/// Counting function of the symbol's eigenvalues over the M^k torus grid,
/// normalised by M^k (total mass = number of base vertices).
SpectralCDF torus_cdf(const TorusSymbol& sym, std::size_t m, Backend backend = Backend::parallel);

struct QuadratureOptions {
  std::size_t initial_points = 16;      // per dimension, >= 4
  std::size_t max_points = 1u << 14;    // per dimension
  double tolerance = 1e-10;             // successive-doubling change
  Backend backend = Backend::parallel;
};

struct QuadratureResult {
  Complex value;
  std::size_t points = 0; // per dimension at acceptance
  double last_change = 0.0;
};

/// (2 pi)^{-k} int_{T^k} sum_j log(1 - lambda_j(theta) u + q u^2) d theta by the
/// periodic trapezoid rule, doubling M until successive values agree to the
/// tolerance. DomainError if u is not in Omega; NumericError past the cap.
QuadratureResult l2_log_det_quadrature(const TorusSymbol& sym, int q, Complex u,
                                       const QuadratureOptions& options = {});

Complex l2_log_det(const TorusSymbol& sym, int q, Complex u, std::size_t initial_points = 16);

/// Z_pi(Y,u) = (1 - u^2)^{-chi(base)} exp(l2_log_det) for the Z^k-cover Y.
Complex l2_zeta_abelian(const MultiGraph& base, const VoltageAssignment& volt, Complex u,
                        const QuadratureOptions& options = {});

/// Tr_pi A^m for m = 0..max_length: closed walks of length m from (x, 0) in
/// the Z^k-cover, summed over base vertices x. Exact dynamic programming on a
/// box of radius max_length * (largest frequency).
std::vector<BigInt> closed_walk_traces(const TorusSymbol& sym, std::size_t max_length);

/// Truncated -sum_{m=1}^{terms} Tr_pi (A u - q u^2)^m / m.
/// DomainError unless |u| <= 1/(2(q+1)).
Complex l2_series_oracle(const TorusSymbol& sym, int q, Complex u, std::size_t terms);
Complex l2_series_oracle(std::span<const BigInt> traces, int q, Complex u, std::size_t terms);

/// An L^2-zeta function on Omega, as a value procedure.
struct L2Zeta {
  long chi_base = 0;
  int q = 0;
  std::function<Complex(Complex)> evaluator;
  std::string description;
  // Identifies the infinite graph whose zeta this is: "tree" for the constant
  // 1 (any tree), "torus:<base and voltages>" for Z^k-covers, empty if unknown.
  std::string limit_key;

  Complex operator()(Complex u) const { return evaluator(u); }
};

/// Universal cover of a (q+1)-regular graph: the tree, whose L^2-zeta is 1.
L2Zeta tree_l2_reference(int q, long chi_base);

/// The tree's von Neumann determinant, (1 - u^2)^{chi_base}.
Complex tree_l2_determinant(long chi_base, Complex u);

L2Zeta constant_l2_target(Complex value, int q, long chi_base);

/// Stable text key for the Z^k-cover of `base` defined by `voltages`.
std::string torus_limit_key(const MultiGraph& base, const std::vector<GroupElement>& voltages);

L2Zeta torus_l2_target(const MultiGraph& base, const VoltageAssignment& volt,
                       const QuadratureOptions& options = {});

} // namespace ihara
