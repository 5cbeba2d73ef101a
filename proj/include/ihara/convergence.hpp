#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "ihara/covers.hpp"
#include "ihara/kernels.hpp"
#include "ihara/l2zeta.hpp"
#include "ihara/zeta.hpp"

namespace ihara {

/// A compact subset of Omega: points of a resolution x resolution square
/// lattice on [-radius, radius]^2 that lie in the closed disk of that radius
/// and keep `margin` away from C. Enumerated row-major (imaginary part outer,
/// ascending), so the point list is reproducible.
struct GridSpec {
  int q = 1;
  double radius = 0.5;
  std::size_t resolution = 32;
  double margin = 0.05;

  void validate() const;
  std::vector<Complex> points() const;
};

double default_margin(int q);

struct LevelRow {
  std::size_t index = 1; // N_i
  std::size_t vertices = 0;
  std::size_t components = 1;
  double sup_error = 0.0;
  Complex argmax;
};

struct ConvergenceReport {
  GridSpec grid;
  std::string target;
  std::string tower;
  bool target_verified = false;
  std::vector<Complex> points;
  std::vector<Complex> target_values;
  std::vector<LevelRow> rows;
  std::vector<std::vector<double>> error_field; // [level][point]

  bool strictly_decreasing(std::size_t first_level = 0) const;
};

/// The infinite graph the tower converges to, as an L2Zeta::limit_key:
/// "tree" for homology towers and for cyclic towers over a base with a
/// one-dimensional cycle space, otherwise the torus key of its voltages.
std::string tower_limit_key(const Tower& tower);

/// sup over the grid of |Z(B_i,u)^{1/N_i} - target(u)| for every level.
/// InputError if a level is not (q+1)-regular with the grid's q.
ConvergenceReport tower_convergence(const Tower& tower, const L2Zeta& target, const GridSpec& grid,
                                    Backend backend = Backend::parallel);

/// Per level, sup over `lambda_grid` of |F_i(lambda) - F(lambda)| where F_i is
/// the level's eigenvalue counting function normalised by N_i.
std::vector<double> cdf_convergence(const Tower& tower, const std::function<double(double)>& target_cdf,
                                    const std::vector<double>& lambda_grid);

/// |Z(B,u) Det_pi(Y,u) - det_poly(B)(u)| with Y the universal cover (tree) of
/// B, Det_pi(Y,u) = (1-u^2)^{chi(B)}. DomainError outside Omega.
double deitmar_residual(const ZetaFunction& base, Complex u);
double deitmar_residual(const MultiGraph& base, Complex u);

/// Polylines tracing C: the circle |u| = q^{-1/2} (closed) and the two real
/// segments [-1,-1/q], [1/q,1].
std::vector<std::vector<Complex>> c_overlay(int q, std::size_t circle_samples = 256);

} // namespace ihara
