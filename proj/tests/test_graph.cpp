#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "ihara/errors.hpp"
#include "ihara/graph.hpp"
#include "oracles.hpp"

using namespace ihara;

TEST(GraphCore, LoopContributesTwoToDegreeAndDiagonal) {
  auto g = build_graph(1, {{0, 0}});
  EXPECT_EQ(g.degree(0), 2);
  EXPECT_EQ(g.adjacency()(0, 0), 2.0);
  EXPECT_EQ(g.loop_count(), 1u);
  EXPECT_EQ(g.euler_characteristic(), 0);
}

TEST(GraphCore, CycleAndComplete) {
  auto c4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  auto r = regularity(c4);
  EXPECT_TRUE(r.is_regular);
  EXPECT_EQ(r.q, 1);
  EXPECT_EQ(r.chi, 0);

  auto k4 = named::complete(4);
  r = regularity(k4);
  EXPECT_TRUE(r.is_regular);
  EXPECT_EQ(r.q, 2);
  EXPECT_EQ(r.chi, -2);
}

TEST(GraphCore, Regularity) {
  auto b2 = named::bouquet(2);
  auto r = regularity(b2);
  EXPECT_TRUE(r.is_regular);
  EXPECT_EQ(r.q, 3);
  EXPECT_EQ(r.chi, -1);
  EXPECT_FALSE(regularity(named::path(3)).is_regular);
}

TEST(GraphCore, InputErrors) {
  EXPECT_THROW(build_graph(0, {}), InputError);
  EXPECT_THROW(build_graph(3, {{0, 3}}), InputError);
}

TEST(GraphCore, SpectraOfNamedGraphs) {
  auto expect_spectrum = [](const MultiGraph& g, std::vector<double> want) {
    const auto& got = g.spectrum().eigenvalues;
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t i = 0; i < want.size(); ++i) EXPECT_NEAR(got[i], want[i], 1e-10 * g.max_degree());
  };
  expect_spectrum(named::cycle(4), {-2, 0, 0, 2});
  expect_spectrum(named::complete(4), {-1, -1, -1, 3});
  expect_spectrum(named::bouquet(1), {2});
  expect_spectrum(named::petersen(), {-2, -2, -2, -2, 1, 1, 1, 1, 1, 3});
}

TEST(GraphCore, SpectrumTraceIdentities) {
  for (const auto& g : oracle::corpus()) {
    const auto& ev = g.spectrum().eigenvalues;
    const double sum = std::accumulate(ev.begin(), ev.end(), 0.0);
    double sq = 0.0;
    for (double x : ev) sq += x * x;
    const Eigen::MatrixXd a = g.adjacency();
    EXPECT_NEAR(sum, 2.0 * static_cast<double>(g.loop_count()), 1e-8) << g.name();
    EXPECT_NEAR(sq, (a * a).trace(), 1e-8) << g.name();
  }
}

TEST(GraphCore, SpectrumInvariantUnderRelabeling) {
  std::mt19937 rng(42);
  for (const auto& g : oracle::corpus()) {
    std::vector<std::size_t> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> edges;
    for (auto [a, b] : g.edges()) edges.emplace_back(perm[a], perm[b]);
    MultiGraph h(g.vertex_count(), edges);
    const auto& x = g.spectrum().eigenvalues;
    const auto& y = h.spectrum().eigenvalues;
    for (std::size_t i = 0; i < x.size(); ++i) EXPECT_NEAR(x[i], y[i], 1e-8);
  }
}

TEST(GraphCore, RegularSpectrumBoundedAndTopEigenvalue) {
  for (const auto& g : oracle::corpus()) {
    const auto r = regularity(g);
    ASSERT_TRUE(r.is_regular);
    const auto& ev = g.spectrum().eigenvalues;
    for (double x : ev) {
      EXPECT_LE(x, r.q + 1 + 1e-9);
      EXPECT_GE(x, -(r.q + 1) - 1e-9);
    }
    EXPECT_NEAR(ev.back(), r.q + 1, 1e-9);
  }
}

TEST(GraphCore, ConnectivityAndBipartiteness) {
  EXPECT_TRUE(named::cycle(6).is_bipartite());
  EXPECT_FALSE(named::cycle(5).is_bipartite());
  EXPECT_FALSE(named::bouquet(1).is_bipartite());
  EXPECT_EQ(build_graph(4, {{0, 1}, {2, 3}}).component_count(), 2u);
}

TEST(GraphCore, SpectrumSharedBetweenCopies) {
  auto g = named::petersen();
  const auto& s = g.spectrum();
  MultiGraph copy = g;
  EXPECT_EQ(&copy.spectrum(), &s);
}
