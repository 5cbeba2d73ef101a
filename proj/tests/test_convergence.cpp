#include <gtest/gtest.h>

#include <cmath>

#include "ihara/convergence.hpp"
#include "ihara/errors.hpp"
#include "oracles.hpp"

using namespace ihara;

TEST(GridSpec, PointsRespectOmegaAndAreDeterministic) {
  const GridSpec grid{3, 0.3, 25, 0.05};
  const auto pts = grid.points();
  ASSERT_FALSE(pts.empty());
  for (const auto& u : pts) {
    EXPECT_TRUE(omega_contains(3, u, 0.05));
    EXPECT_LE(std::abs(u), 0.3 + 1e-12);
  }
  EXPECT_EQ(pts, grid.points());
  EXPECT_THROW((GridSpec{2, 0.8, 10, 0.0}.points()), InputError);
  EXPECT_THROW((GridSpec{2, 0.5, 1, 0.0}.points()), InputError);
}

TEST(TowerConvergence, CycleTowerAgainstOne) {
  const auto tower = cyclic_tower(named::bouquet(1), {{1}}, {1, 2, 4, 8, 16});
  const GridSpec grid{1, 0.5, 32, 0.05};
  const auto report = tower_convergence(tower, constant_l2_target(1.0, 1, 0), grid);
  ASSERT_EQ(report.rows.size(), 5u);
  EXPECT_TRUE(report.strictly_decreasing());
  EXPECT_TRUE(report.target_verified);
  EXPECT_LT(report.rows.back().sup_error, 1e-5);
  // Level 1 is the loop itself: Z = (1-u)^2.
  double sup1 = 0.0;
  for (const auto& u : report.points) sup1 = std::max(sup1, std::abs((1.0 - u) * (1.0 - u) - 1.0));
  EXPECT_NEAR(report.rows[0].sup_error, sup1, 1e-13);
  // Closed form at every point of the last level.
  for (std::size_t p = 0; p < report.points.size(); ++p) {
    const Complex u = report.points[p];
    const Complex exact = std::exp(2.0 / 16.0 * std::log(1.0 - ipow(u, 16)));
    EXPECT_NEAR(report.error_field[4][p], std::abs(exact - 1.0), 1e-13);
  }
}

TEST(TowerConvergence, LevelMustMatchGridQ) {
  const auto tower = cyclic_tower(named::bouquet(1), {{1}}, {1, 2});
  EXPECT_THROW(tower_convergence(tower, constant_l2_target(1.0, 2, 0), GridSpec{2, 0.3, 8, 0.01}), InputError);
}

TEST(TowerConvergence, TargetVerification) {
  const auto torus = cyclic_tower(named::bouquet(2), {{1, 0}, {0, 1}}, {2, 4});
  const GridSpec grid{3, 0.2, 6, 0.05};
  EXPECT_FALSE(tower_convergence(torus, constant_l2_target(1.0, 3, -1), grid).target_verified);
  const auto target = torus_l2_target(named::bouquet(2), {AbelianGroup{{0, 0}}, {{1, 0}, {0, 1}}});
  EXPECT_TRUE(tower_convergence(torus, target, grid).target_verified);
  const auto homology = homology_tower(named::bouquet(2), 2, 1);
  EXPECT_TRUE(tower_convergence(homology, tree_l2_reference(3, -1), grid).target_verified);
}

TEST(TowerConvergence, SerialAndParallelReportsMatch) {
  const auto tower = homology_tower(named::bouquet(2), 2, 1);
  const GridSpec grid{3, 0.3, 20, 0.05};
  const auto a = tower_convergence(tower, tree_l2_reference(3, -1), grid, Backend::serial);
  const auto b = tower_convergence(tower, tree_l2_reference(3, -1), grid, Backend::parallel);
  EXPECT_EQ(a.error_field, b.error_field);
}

TEST(CdfConvergence, CycleTowerApproachesArcsine) {
  const auto tower = cyclic_tower(named::bouquet(1), {{1}}, {1, 10, 50, 200});
  std::vector<double> grid;
  for (int i = 0; i < 50; ++i) grid.push_back(-2.0 + 4.0 * (i + 0.5) / 50.0);
  const auto sup = cdf_convergence(tower, oracle::arcsine_cdf, grid);
  ASSERT_EQ(sup.size(), 4u);
  EXPECT_LE(sup.back(), 0.05);
  for (std::size_t i = 1; i < sup.size(); ++i) EXPECT_LT(sup[i], sup[i - 1]);
  // Below the spectrum both sides vanish.
  EXPECT_EQ(cdf_convergence(tower, oracle::arcsine_cdf, {-2.5}).back(), 0.0);
}

TEST(Deitmar, Residuals) {
  EXPECT_LT(deitmar_residual(named::complete(4), Complex(0.0, 0.3)), 1e-10);
  EXPECT_LT(deitmar_residual(named::petersen(), Complex(0.1, 0.2)), 1e-10);
  for (const auto& g : oracle::corpus()) EXPECT_EQ(deitmar_residual(g, 0.0), 0.0) << g.name();
  EXPECT_THROW(deitmar_residual(named::complete(4), 0.6), DomainError);
}

TEST(COverlay, ShapesOfC) {
  const auto lines = c_overlay(2, 64);
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[0].size(), 65u);
  for (const auto& u : lines[0]) EXPECT_NEAR(std::abs(u), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_EQ(lines[2].front(), Complex(0.5));
}
