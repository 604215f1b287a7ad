#include "pairwalk/graph.hpp"

#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pairwalk/families.hpp"

namespace pairwalk {
namespace {

using ::pairwalk::testing::brute_force_twins;
using ::pairwalk::testing::pair_projector;
using ::pairwalk::testing::random_graph;
using ::pairwalk::testing::random_twin_graph;

// K_{2,4}: a = 0, b = 1, the other part is 2..5.
Graph k24() { return complete_bipartite(2, 4); }

TEST(PairStateTest, RejectsEqualEndpoints) { EXPECT_THROW(PairState(3, 3), InvalidArgument); }

TEST(PairStateTest, EqualityIgnoresOrientation) {
  const PairState p(4, 1);
  EXPECT_EQ(p, PairState(1, 4));
  EXPECT_EQ(p.a(), 4u);
  EXPECT_EQ(p.canonical().a(), 1u);
  EXPECT_EQ(std::hash<PairState>{}(p), std::hash<PairState>{}(PairState(1, 4)));
  EXPECT_EQ(p.shared_with(PairState(1, 2)), 1);
  EXPECT_EQ(p.shared_with(PairState(1, 4)), 2);
  EXPECT_EQ(p.shared_with(PairState(0, 2)), 0);
}

TEST(GraphTest, RejectsMalformedEdges) {
  EXPECT_THROW(Graph(3, {{0, 0, 1.0}}), InvalidArgument);
  EXPECT_THROW(Graph(3, {{0, 3, 1.0}}), InvalidArgument);
  EXPECT_THROW(Graph(3, {{0, 1, 1.0}, {1, 0, 2.0}}), InvalidArgument);
}

TEST(GraphTest, ZeroWeightIsAbsence) {
  const Graph g(3, {{0, 1, 0.0}, {1, 2, 2.0}});
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_FALSE(g.adjacent(0, 1));
  EXPECT_EQ(g, Graph(3, {{1, 2, 2.0}}));
}

TEST(LaplacianTest, SingleEdge) {
  Eigen::MatrixXd expected(2, 2);
  expected << 1, -1, -1, 1;
  EXPECT_EQ(laplacian(complete_graph(2)), expected);
}

TEST(LaplacianTest, TriangleIsThreeIMinusJ) {
  const Eigen::MatrixXd expected = 3.0 * Eigen::MatrixXd::Identity(3, 3) - Eigen::MatrixXd::Ones(3, 3);
  EXPECT_EQ(laplacian(complete_graph(3)), expected);
}

TEST(LaplacianTest, EdgelessIsZero) { EXPECT_EQ(laplacian(Graph(4)), Eigen::MatrixXd::Zero(4, 4)); }

TEST(LaplacianTest, SymmetricWithZeroRowSums) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = random_graph(rng, 2 + trial % 9);
    const auto lap = laplacian(g);
    EXPECT_EQ(lap, lap.transpose());
    EXPECT_LE(lap.rowwise().sum().cwiseAbs().maxCoeff(), 1e-12);
    for (Vertex v = 0; v < g.order(); ++v) EXPECT_DOUBLE_EQ(lap(v, v), g.degree(v));
  }
}

TEST(NeighborsTest, Examples) {
  using N = std::vector<std::pair<Vertex, double>>;
  EXPECT_EQ(neighbors(k24(), 0), (N{{2, 1.0}, {3, 1.0}, {4, 1.0}, {5, 1.0}}));
  EXPECT_EQ(neighbors(path(3), 1), (N{{0, 1.0}, {2, 1.0}}));
  EXPECT_TRUE(neighbors(Graph(3, {{0, 1, 1.0}}), 2).empty());
  EXPECT_THROW(neighbors(path(3), 3), InvalidArgument);
}

TEST(TwinsTest, Examples) {
  EXPECT_TRUE(are_twins(k24(), 0, 1));
  EXPECT_FALSE(are_twins(k24(), 0, 2));
  EXPECT_TRUE(are_twins(circulant(8, {1, 3, 4, 5, 7}), 2, 6));
  EXPECT_THROW(are_twins(k24(), 2, 2), InvalidArgument);
}

TEST(TwinsTest, UnequalWeightsAreNotTwins) {
  const Graph g(3, {{0, 2, 1.0}, {1, 2, 2.0}});
  EXPECT_FALSE(are_twins(g, 0, 1));
}

TEST(TwinsTest, MatchesBruteForceAndIsSymmetric) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = trial % 2 ? random_graph(rng, 2 + trial % 7, 0.5) : random_twin_graph(rng, 3 + trial % 6).first;
    for (Vertex a = 0; a < g.order(); ++a)
      for (Vertex b = 0; b < g.order(); ++b) {
        if (a == b) continue;
        EXPECT_EQ(are_twins(g, a, b), brute_force_twins(g, a, b));
        EXPECT_EQ(are_twins(g, a, b), are_twins(g, b, a));
      }
  }
}

TEST(TwinsTest, PairStateIsEigenvector) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const auto [g, pair] = random_twin_graph(rng, 3 + trial % 8);
    const auto n = g.order();
    const Eigen::VectorXd x = pair.vector(n);
    const double lambda = g.degree(pair.a()) + g.weight(pair.a(), pair.b());
    EXPECT_LE((laplacian(g) * x - lambda * x).norm(), 1e-12);
  }
}

TEST(AllTwinPairsTest, CompleteBipartite) {
  const auto pairs = all_twin_pairs(k24());
  std::vector<PairState> expected;
  for (Vertex a = 0; a < 6; ++a)
    for (Vertex b = a + 1; b < 6; ++b)
      if (brute_force_twins(k24(), a, b)) expected.emplace_back(a, b);
  ASSERT_EQ(expected.size(), 7u);
  EXPECT_EQ(pairs, expected);
  EXPECT_EQ(pairs.front(), PairState(0, 1));
}

TEST(AllTwinPairsTest, SmallGraphs) {
  EXPECT_EQ(all_twin_pairs(path(3)), std::vector<PairState>{PairState(0, 2)});
  EXPECT_EQ(all_twin_pairs(complete_graph(2)), std::vector<PairState>{PairState(0, 1)});
}

TEST(PerturbTest, DeletesEdge) {
  const auto g = perturb(complete_graph(3), {PairState(0, 1), -1.0});
  EXPECT_EQ(g, Graph(3, {{0, 2, 1.0}, {1, 2, 1.0}}));
  EXPECT_EQ(g.edge_count(), 2u);
}

TEST(PerturbTest, AddsWeightedEdgeBetweenTwins) {
  const auto g = perturb(k24(), {PairState(0, 1), 2.0});
  EXPECT_EQ(g.weight(0, 1), 2.0);
  EXPECT_EQ(g.edge_count(), 9u);
  EXPECT_TRUE(are_twins(g, 0, 1));
}

TEST(PerturbTest, ZeroAlphaIsIdentity) { EXPECT_EQ(perturb(k24(), {PairState(2, 3), 0.0}), k24()); }

TEST(PerturbTest, LaplacianShiftsByRankOne) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> alpha_dist(-3.0, 3.0);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = random_graph(rng, 2 + trial % 9);
    std::uniform_int_distribution<Vertex> pick(0, g.order() - 1);
    Vertex a = pick(rng), b = pick(rng);
    if (a == b) b = (a + 1) % g.order();
    const Perturbation p{PairState(a, b), alpha_dist(rng)};
    const Eigen::MatrixXd expected = laplacian(g) + p.alpha * pair_projector(g.order(), p.pair);
    EXPECT_LE((laplacian(perturb(g, p)) - expected).cwiseAbs().maxCoeff(), 1e-15);
  }
}

TEST(PerturbTest, RoundTripRestoresGraph) {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> quarter(-12, 12);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = random_graph(rng, 2 + trial % 9);
    std::uniform_int_distribution<Vertex> pick(0, g.order() - 1);
    Vertex a = pick(rng), b = pick(rng);
    if (a == b) b = (a + 1) % g.order();
    const double alpha = 0.25 * quarter(rng);
    const auto back = perturb(perturb(g, {PairState(a, b), alpha}), {PairState(a, b), -alpha});
    EXPECT_EQ(back, g);
    EXPECT_EQ(back.edge_count(), g.edge_count());
  }
}

TEST(PairProjectorTest, ActionMatchesDenseMatrix) {
  const PairState p(1, 3);
  Eigen::VectorXd x(5);
  x << 0.5, -2.0, 3.0, 7.0, 1.25;
  EXPECT_EQ(apply_pair_projector(p, x), (pair_projector(5, p) * x).eval());
}

}  // namespace
}  // namespace pairwalk
