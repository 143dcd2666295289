#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "degcorr/error.hpp"
#include "degcorr/generators.hpp"
#include "degcorr/measures.hpp"
#include "degcorr/rng.hpp"
#include "degcorr/stats.hpp"

using namespace degcorr;

TEST(BridgeGraph, SizesAndEdgeOrder) {
  const DirectedGraph g = bridge_graph({2, 3});
  EXPECT_EQ(g.node_count(), 7u);
  EXPECT_EQ(g.edge_count(), 6u);
  EXPECT_EQ(g.edges()[0], (Edge{2, 0}));
  EXPECT_EQ(g.edges()[2], (Edge{1, 4}));
  EXPECT_EQ(g.edges()[5], (Edge{0, 1}));

  const DirectedGraph path = bridge_graph({1, 1});
  EXPECT_EQ(path.edges().size(), 3u);
  EXPECT_EQ(path, DirectedGraph(4, {{2, 0}, {1, 3}, {0, 1}}));
}

TEST(BridgeGraph, DegreeTableSweep) {
  for (Degree k = 1; k <= 50; ++k) {
    for (Degree m = 1; m <= 50; ++m) {
      const DegreeTable d = degrees(bridge_graph({k, m}));
      ASSERT_EQ(d.in_degree()[0], k);
      ASSERT_EQ(d.out_degree()[0], 1);
      ASSERT_EQ(d.in_degree()[1], 1);
      ASSERT_EQ(d.out_degree()[1], m);
      for (Degree i = 0; i < k; ++i) {
        ASSERT_EQ(d.out_degree()[2 + i], 1);
        ASSERT_EQ(d.in_degree()[2 + i], 0);
      }
      for (Degree j = 0; j < m; ++j) {
        ASSERT_EQ(d.out_degree()[2 + k + j], 0);
        ASSERT_EQ(d.in_degree()[2 + k + j], 1);
      }

      const DegreeTable h = degrees(disconnected_bridge_graph({k, m}));
      ASSERT_EQ(h.node_count(), static_cast<std::size_t>(k + m + 3));
      ASSERT_EQ(h.edge_count(), k + m + 2);
      const std::size_t u = static_cast<std::size_t>(k + m + 2);
      ASSERT_EQ(h.in_degree()[u], 1);
      ASSERT_EQ(h.out_degree()[u], 1);
    }
  }
}

TEST(BridgeGraph, DisconnectedHasNoHubWithBothSides) {
  const DegreeTable d = degrees(disconnected_bridge_graph({2, 2}));
  EXPECT_EQ(d.node_count(), 7u);
  EXPECT_EQ(d.edge_count(), 6);
  for (std::size_t v = 0; v < d.node_count(); ++v) {
    EXPECT_FALSE(d.in_degree()[v] >= 2 && d.out_degree()[v] >= 2);
  }
  EXPECT_EQ(disconnected_bridge_graph({1, 1}).edge_count(), 4u);
}

TEST(BridgeGraph, MomentIdentities) {
  for (Degree n = 1; n <= 100; ++n) {
    for (Degree a = 1; a <= 5; ++a) {
      const DirectedGraph g = bridge_graph({n, a * n});
      const DegreeTable d = degrees(g);
      Int128 cross = 0;
      for (const Edge& e : g.edges()) cross += static_cast<Int128>(d.in_degree()[e.source]) * d.out_degree()[e.target];
      ASSERT_EQ(cross, static_cast<Int128>(a * n * n));
      ASSERT_EQ(vertex_moment_sum_exact(d, 1, 1), static_cast<Int128>((1 + a) * n));
      ASSERT_EQ(vertex_moment_sum_exact(d, 1, 2), static_cast<Int128>(n * n + a * n));
      ASSERT_EQ(vertex_moment_sum_exact(d, 2, 1), static_cast<Int128>(n + a * a * n * n));
    }
  }
}

TEST(PowerLaw, LightTailIsAlmostAlwaysMinimum) {
  const auto xs = sample_integer_power_law({50.0, 1}, 1, 10000);
  const auto ones = std::count(xs.begin(), xs.end(), 1);
  EXPECT_GE(ones, 9900);
  EXPECT_EQ(xs, sample_integer_power_law({50.0, 1}, 1, 10000));
  EXPECT_NE(xs, sample_integer_power_law({1.5, 1}, 2, 10000));
}

TEST(PowerLaw, TailSlopeMatchesGamma) {
  const std::size_t count = 1'000'000;
  auto xs = sample_integer_power_law({1.5, 1}, 7, count);
  std::sort(xs.begin(), xs.end());
  // Survival at integer thresholds spanning the upper deciles, regressed on log t.
  std::vector<double> lt, ls;
  for (double q : {0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99, 0.995, 0.999}) {
    const Degree t = xs[static_cast<std::size_t>(q * count)];
    const auto above = xs.end() - std::upper_bound(xs.begin(), xs.end(), t);
    if (above == 0) continue;
    lt.push_back(std::log(static_cast<double>(t) + 1.0));
    ls.push_back(std::log(static_cast<double>(above) / count));
  }
  EXPECT_NEAR(least_squares_slope(lt, ls), -1.5, 0.15);
}

TEST(PowerLaw, MinimumScalesDraws) {
  for (Degree x : sample_integer_power_law({2.0, 5}, 3, 1000)) EXPECT_GE(x, 5);
}

TEST(RandomBridgeCollection, ComponentsAndEdgeCount) {
  const RandomBridgeCollection c = random_bridge_collection(50, 2.5, {1.5, 1}, 9);
  ASSERT_EQ(c.components.size(), 50u);
  EXPECT_TRUE(c.heavy_tail_regime);
  const auto xs = sample_integer_power_law({1.5, 1}, derive_seed(9, 0), 50);
  const auto ys = sample_integer_power_law({1.5, 1}, derive_seed(9, 1), 50);
  Degree edges = 0;
  std::size_t base = 0;
  for (std::size_t i = 0; i < 50; ++i) {
    EXPECT_EQ(c.components[i].k, xs[i] + ys[i]);
    EXPECT_EQ(c.components[i].m, static_cast<Degree>(std::floor(xs[i] + 2.5 * ys[i])));
    // Each component's last edge is its bridge (v, w) inside a contiguous block.
    edges += c.components[i].k + c.components[i].m + 1;
    EXPECT_EQ(c.graph.edges()[static_cast<std::size_t>(edges) - 1], (Edge{static_cast<NodeId>(base), static_cast<NodeId>(base + 1)}));
    base += static_cast<std::size_t>(c.components[i].k + c.components[i].m + 2);
  }
  EXPECT_EQ(static_cast<Degree>(c.graph.edge_count()), edges);
  EXPECT_EQ(c.graph.node_count(), base);

  const RandomBridgeCollection one = random_bridge_collection(1, 1.0, {1.5, 1}, 4);
  EXPECT_EQ(one.graph, bridge_graph(one.components[0]));
  EXPECT_FALSE(random_bridge_collection(3, 1.0, {2.5, 1}, 4).heavy_tail_regime);
  EXPECT_THROW(random_bridge_collection(0, 1.0, {1.5, 1}, 4), Error);
}

TEST(IidDegreeSequence, IndependentStreams) {
  const auto seq = iid_degree_sequence(100000, {2.5, 1}, {2.5, 1}, 5);
  EXPECT_EQ(seq, iid_degree_sequence(100000, {2.5, 1}, {2.5, 1}, 5));
  std::vector<double> xs, ys;
  for (const auto& nd : seq) {
    // Ranks of heavy-tailed values would be more robust; log keeps the moments finite.
    xs.push_back(std::log(static_cast<double>(nd.out)));
    ys.push_back(std::log(static_cast<double>(nd.in)));
  }
  const double mx = mean(xs), my = mean(ys);
  double c = 0, vx = 0, vy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    c += (xs[i] - mx) * (ys[i] - my);
    vx += (xs[i] - mx) * (xs[i] - mx);
    vy += (ys[i] - my) * (ys[i] - my);
  }
  EXPECT_LT(std::abs(c / std::sqrt(vx * vy)), 0.01);
}

TEST(IidDegreeSequence, MeanMatchesExactFlooredParetoMean) {
  // E[floor(X)] = sum_{t>=1} P(X >= t) = 1 + sum_{t>=2} t^-gamma for x_min = 1.
  const double gamma = 3.0;
  double expected = 1.0;
  for (int t = 2; t < 2'000'000; ++t) expected += std::pow(t, -gamma);
  const auto seq = iid_degree_sequence(200000, {gamma, 1}, {gamma, 1}, 8);
  std::vector<double> outs;
  for (const auto& nd : seq) outs.push_back(static_cast<double>(nd.out));
  EXPECT_NEAR(mean(outs), expected, 0.05 * expected);
}
