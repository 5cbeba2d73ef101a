#include "ihara/convergence.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "ihara/errors.hpp"

namespace ihara {

double default_margin(int q) { return 0.05 / std::sqrt(static_cast<double>(q)); }

void GridSpec::validate() const {
  const RegionOmega omega(q);
  if (!(radius > 0.0) || radius >= omega.radius()) {
    std::ostringstream msg;
    msg << "grid radius " << radius << " must lie in (0, q^{-1/2} = " << omega.radius() << ")";
    throw InputError(msg.str());
  }
  if (resolution < 2) throw InputError("grid resolution must be >= 2");
  if (margin < 0.0) throw InputError("grid margin must be >= 0");
}

std::vector<Complex> GridSpec::points() const {
  validate();
  const RegionOmega omega(q);
  std::vector<Complex> out;
  const double step = 2.0 * radius / static_cast<double>(resolution - 1);
  for (std::size_t i = 0; i < resolution; ++i) {
    const double im = -radius + step * static_cast<double>(i);
    for (std::size_t j = 0; j < resolution; ++j) {
      const Complex u(-radius + step * static_cast<double>(j), im);
      if (std::abs(u) <= radius * (1.0 + 1e-12) && omega.contains(u, margin)) out.push_back(u);
    }
  }
  return out;
}

bool ConvergenceReport::strictly_decreasing(std::size_t first_level) const {
  for (std::size_t i = first_level + 1; i < rows.size(); ++i) {
    if (!(rows[i].sup_error < rows[i - 1].sup_error)) return false;
  }
  return true;
}

std::string tower_limit_key(const Tower& tower) {
  if (tower.kind == Tower::Kind::homology) return "tree";
  if (tower.base.is_connected() && tower.base.euler_characteristic() == 0 && tower.levels.size() > 1 &&
      tower.levels.back().components == 1 && tower.levels.back().index > 1) {
    return "tree"; // Z-cover of a single cycle is the line
  }
  return torus_limit_key(tower.base, tower.voltages);
}

ConvergenceReport tower_convergence(const Tower& tower, const L2Zeta& target, const GridSpec& grid,
                                    Backend backend) {
  ConvergenceReport report;
  report.grid = grid;
  report.points = grid.points();
  report.target = target.description;
  report.tower = tower.provenance;
  report.target_verified = !target.limit_key.empty() && target.limit_key == tower_limit_key(tower);

  const RegionOmega omega(grid.q);
  for (const auto& u : report.points) {
    if (!omega.contains(u, grid.margin)) throw InputError("grid point outside Omega");
  }
  report.target_values.reserve(report.points.size());
  for (const auto& u : report.points) report.target_values.push_back(target(u));

  const long chi_base = tower.base.euler_characteristic();
  for (const auto& level : tower.levels) {
    const auto reg = regularity(level.graph);
    if (!reg.is_regular || reg.q != grid.q) {
      std::ostringstream msg;
      msg << "tower level with " << level.graph.vertex_count() << " vertices is not " << grid.q + 1
          << "-regular";
      throw InputError(msg.str());
    }
    if (level.graph.euler_characteristic() != static_cast<long>(level.index) * chi_base) {
      throw InputError("tower level Euler characteristic is not N_i * chi(base)");
    }
    const auto& eigs = level.graph.spectrum().eigenvalues;
    const auto logs = kernels::log_det_grid(eigs, grid.q, report.points, backend);

    LevelRow row;
    row.index = level.index;
    row.vertices = level.graph.vertex_count();
    row.components = level.components;
    std::vector<double> errors(report.points.size());
    for (std::size_t p = 0; p < report.points.size(); ++p) {
      const Complex u = report.points[p];
      const Complex value =
          ipow(1.0 - u * u, -chi_base) * std::exp(logs[p] / static_cast<double>(level.index));
      errors[p] = std::abs(value - report.target_values[p]);
      if (p == 0 || errors[p] > row.sup_error) {
        row.sup_error = errors[p];
        row.argmax = u;
      }
    }
    report.rows.push_back(row);
    report.error_field.push_back(std::move(errors));
  }
  return report;
}

std::vector<double> cdf_convergence(const Tower& tower, const std::function<double(double)>& target_cdf,
                                    const std::vector<double>& lambda_grid) {
  std::vector<double> out;
  for (const auto& level : tower.levels) {
    const auto cdf = empirical_cdf(level.graph.spectrum(), level.index);
    double sup = 0.0;
    for (double lambda : lambda_grid) sup = std::max(sup, std::abs(cdf(lambda) - target_cdf(lambda)));
    out.push_back(sup);
  }
  return out;
}

double deitmar_residual(const ZetaFunction& base, Complex u) {
  if (!base.q_info.is_regular || base.q_info.q < 1) {
    throw InputError("deitmar_residual: base must be (q+1)-regular with q >= 1");
  }
  if (!omega_contains(base.q_info.q, u, kBranchCutMargin)) {
    std::ostringstream msg;
    msg << "deitmar_residual: u = " << u << " is not inside Omega";
    throw DomainError(msg.str());
  }
  return std::abs(zeta_eval(base, u) * tree_l2_determinant(base.chi, u) - base.det_poly(u));
}

double deitmar_residual(const MultiGraph& base, Complex u) {
  if (!base.is_connected()) throw InputError("deitmar_residual: base must be connected");
  return deitmar_residual(zeta_function(base), u);
}

std::vector<std::vector<Complex>> c_overlay(int q, std::size_t circle_samples) {
  const RegionOmega omega(q);
  std::vector<Complex> circle;
  for (std::size_t i = 0; i <= circle_samples; ++i) {
    circle.push_back(std::polar(omega.radius(), 2.0 * std::numbers::pi * static_cast<double>(i) /
                                                    static_cast<double>(circle_samples)));
  }
  const double inv_q = 1.0 / q;
  return {circle, {Complex(-1.0, 0.0), Complex(-inv_q, 0.0)}, {Complex(inv_q, 0.0), Complex(1.0, 0.0)}};
}

} // namespace ihara
