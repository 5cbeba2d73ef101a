#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ihara/graph.hpp"
#include "ihara/polynomial.hpp"

namespace ihara {

/// Ihara zeta function of a finite graph in the product convention
/// Z(X,u) = prod over primitive classes of (1 - u^len), which is the
/// reciprocal of the classical convention. Represented as
///   Z(X,u) = (1 - u^2)^{-chi} * det(I - A u + Q u^2).
struct ZetaFunction {
  long chi = 0;
  IntPolynomial det_poly;
  RegularityInfo q_info;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
};

/// Exact integer coefficients of det(I - A u + Q u^2).
///
/// The determinant is sampled at 2v+1 points of the circle |u| = q_max^{-1/2},
/// interpolated with an inverse DFT, rounded, and re-verified at fresh points
/// (and against prod (1 - lambda u + q u^2) for regular graphs). If the
/// rounded coefficients fail verification the exact route below is used for
/// v <= 64; beyond that a NumericError is thrown.
IntPolynomial det_poly(const MultiGraph& g);

/// Fraction-free route: exact integer determinants (Bareiss) at u = 0..2v
/// followed by Newton interpolation over the rationals.
IntPolynomial det_poly_exact(const MultiGraph& g);

ZetaFunction zeta_function(const MultiGraph& g);

/// (1 - u^2)^{-chi} det_poly(u). DomainError at u = +-1 when chi > 0.
Complex zeta_eval(const ZetaFunction& z, Complex u);

/// The set C = {|u| = q^{-1/2}} u [-1,-1/q] u [1/q,1] and the open slit disk
/// Omega = {|u| < q^{-1/2}} minus the real points with |u| >= 1/q.
class RegionOmega {
public:
  explicit RegionOmega(int q);

  int q() const { return q_; }
  double radius() const { return radius_; }

  /// |u| <= q^{-1/2} - margin and dist(u, real slits) >= margin, with strict
  /// inequalities when margin is 0 (Omega is open).
  bool contains(Complex u, double margin = 0.0) const;
  double distance_to_C(Complex u) const;
  double distance_to_slits(Complex u) const;

private:
  int q_;
  double radius_;
};

bool omega_contains(int q, Complex u, double margin = 0.0);

/// Inputs closer than this to C are rejected rather than nudged.
inline constexpr double kBranchCutMargin = 1e-12;

struct ZetaRoot {
  Complex value;
  int multiplicity = 1;
  double dist_to_C = 0.0;
};

struct ZeroReport {
  int q = 0;
  std::vector<ZetaRoot> roots;
  double max_dist_to_C = 0.0;
  std::size_t total_multiplicity() const;
  bool all_on_C(double tol) const { return max_dist_to_C <= tol; }
};

/// Zeros of Z for a regular graph: per adjacency eigenvalue the two roots of
/// 1 - lambda u + q u^2, plus +-1 with multiplicity -chi when chi < 0.
/// InputError for irregular graphs.
ZeroReport zeta_zeros(const MultiGraph& g);

/// sum over eigenvalues of the principal log of 1 - lambda u + q u^2.
/// Caller guarantees u is in Omega.
Complex log_det_laplacian(std::span<const double> eigenvalues, int q, Complex u);

/// The analytic N-th root of det(I - A u + q u^2) on Omega that equals 1 at 0.
Complex nth_root_det(const MultiGraph& g, std::size_t n, Complex u);

/// (1 - u^2)^{-chi_base} * nth_root_det(level, n, u), the N-th root of the
/// zeta function of an n-fold cover of a base with Euler characteristic
/// chi_base. InputError if chi(level) != n * chi_base.
Complex normalized_zeta(const MultiGraph& level, std::size_t n, long chi_base, Complex u);

struct FunctionalEquationCheck {
  Complex lhs; // Z(X, 1/(qu))
  Complex rhs; // ((1-u^2)/(q^2u^2-1))^chi q^{v-2e} u^{-2e} Z(X,u)
  Complex residual() const { return lhs - rhs; }
  double relative() const;
};

FunctionalEquationCheck functional_equation_residual(const ZetaFunction& z, Complex u);

/// N_m = trace(T^m), m = 1..L, for the non-backtracking operator T on the 2e
/// oriented edges.
std::vector<BigInt> nonbacktracking_traces(const MultiGraph& g, std::size_t max_length);

/// Taylor coefficients c_1..c_L of log Z(X,u) from the Euler product:
/// c_m = -N_m / m.
std::vector<Rational> euler_log_coeffs(const MultiGraph& g, std::size_t max_length);

/// Taylor coefficients c_1..c_L of log[(1-u^2)^{-chi} det_poly(u)].
std::vector<Rational> det_log_coeffs(const ZetaFunction& z, std::size_t max_length);

/// z^n for integer n by repeated squaring.
Complex ipow(Complex z, long n);

} // namespace ihara
