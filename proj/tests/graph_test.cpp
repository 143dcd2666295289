#include <gtest/gtest.h>

#include <sstream>

#include "degcorr/error.hpp"
#include "degcorr/generators.hpp"
#include "degcorr/graph.hpp"
#include "oracle.hpp"

using namespace degcorr;

namespace {

LoadedGraph parse(const std::string& text) {
  std::istringstream in(text);
  return load_edge_list(in);
}

}  // namespace

TEST(LoadEdgeList, RemapsInFirstAppearanceOrder) {
  const LoadedGraph lg = parse("0 1\n1 2\n");
  EXPECT_EQ(lg.graph.node_count(), 3u);
  ASSERT_EQ(lg.graph.edge_count(), 2u);
  EXPECT_EQ(lg.graph.edges()[0], (Edge{0, 1}));
  EXPECT_EQ(lg.graph.edges()[1], (Edge{1, 2}));

  const LoadedGraph sparse = parse("100 7\n7 3\n");
  EXPECT_EQ(sparse.external_ids, (std::vector<std::uint64_t>{100, 7, 3}));
  EXPECT_EQ(sparse.graph.edges()[1], (Edge{1, 2}));
}

TEST(LoadEdgeList, KeepsSelfLoopsAndDuplicates) {
  const LoadedGraph loop = parse("# c\n7 7\n");
  EXPECT_EQ(loop.graph.node_count(), 1u);
  EXPECT_EQ(loop.graph.edges()[0], (Edge{0, 0}));
  EXPECT_EQ(loop.self_loops, 1u);

  const LoadedGraph dup = parse("5 9\n5 9\n");
  EXPECT_EQ(dup.graph.node_count(), 2u);
  EXPECT_EQ(dup.graph.edge_count(), 2u);
  EXPECT_EQ(dup.duplicate_edges, 1u);
}

TEST(LoadEdgeList, EmptyInputIsAnEmptyGraph) {
  const LoadedGraph lg = parse("# nothing\n\n   \n");
  EXPECT_EQ(lg.graph.node_count(), 0u);
  EXPECT_EQ(lg.graph.edge_count(), 0u);
}

TEST(LoadEdgeList, AcceptsLargeIdsAndTabs) {
  const LoadedGraph lg = parse("9223372036854775807\t0\r\n");
  EXPECT_EQ(lg.external_ids[0], 9223372036854775807ull);
}

TEST(LoadEdgeList, MalformedLinesReportLineNumber) {
  const std::vector<std::pair<std::string, std::size_t>> cases = {
      {"0 1\n1\n", 2}, {"0 1\n# x\nfoo bar\n", 3}, {"1 2 3\n", 1}, {"-1 2\n", 1}, {"9223372036854775808 1\n", 1}};
  for (const auto& [text, line] : cases) {
    try {
      parse(text);
      ADD_FAILURE() << "accepted: " << text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), line) << text;
      EXPECT_NE(std::string(e.what()).find("line " + std::to_string(line)), std::string::npos);
    }
  }
}

TEST(LoadEdgeList, RoundTripsThroughWriter) {
  const DirectedGraph g = oracle::random_graph(40, 200, 11);
  std::ostringstream out;
  write_edge_list(out, g);
  const LoadedGraph back = parse(out.str());
  // Remap is first-appearance, so compare through the external id table.
  ASSERT_EQ(back.graph.edge_count(), g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    EXPECT_EQ(back.external_ids[back.graph.edges()[i].source], g.edges()[i].source);
    EXPECT_EQ(back.external_ids[back.graph.edges()[i].target], g.edges()[i].target);
  }
  std::ostringstream again;
  write_edge_list(again, back.graph);
  EXPECT_EQ(parse(again.str()).graph, back.graph);
}

TEST(DirectedGraph, RejectsOutOfRangeEndpoints) {
  EXPECT_THROW(DirectedGraph(2, {{0, 2}}), Error);
}

TEST(Degrees, CountsBothSides) {
  const DegreeTable d = degrees(DirectedGraph(3, {{0, 1}, {1, 2}}));
  EXPECT_EQ(std::vector<Degree>(d.out_degree().begin(), d.out_degree().end()), (std::vector<Degree>{1, 1, 0}));
  EXPECT_EQ(std::vector<Degree>(d.in_degree().begin(), d.in_degree().end()), (std::vector<Degree>{0, 1, 1}));

  const DegreeTable loop = degrees(DirectedGraph(1, {{0, 0}}));
  EXPECT_EQ(loop.out_degree()[0], 1);
  EXPECT_EQ(loop.in_degree()[0], 1);
}

TEST(Degrees, BridgeGraphTable) {
  const DegreeTable d = degrees(bridge_graph({2, 3}));
  EXPECT_EQ(d.in_degree()[0], 2);
  EXPECT_EQ(d.out_degree()[1], 3);
  for (std::size_t v = 2; v < d.node_count(); ++v) {
    EXPECT_LE(d.out_degree()[v], 1);
    EXPECT_LE(d.in_degree()[v], 1);
  }
}

TEST(EdgeDegreePairs, SelectsDegreeKinds) {
  const PairSeries p = edge_degree_pairs(DirectedGraph(3, {{0, 1}, {1, 2}}), kOutIn);
  EXPECT_EQ(p.pairs, (std::vector<DegreePair>{{1, 1}, {1, 1}}));

  const PairSeries g22 = edge_degree_pairs(bridge_graph({2, 2}), kInOut);
  auto count = [&](const PairSeries& s, DegreePair q) { return std::count(s.pairs.begin(), s.pairs.end(), q); };
  EXPECT_EQ(count(g22, {2, 2}), 1);
  EXPECT_EQ(count(g22, {0, 1}), 2);
  EXPECT_EQ(count(g22, {1, 0}), 2);

  const PairSeries h22 = edge_degree_pairs(disconnected_bridge_graph({2, 2}), kInOut);
  EXPECT_EQ(count(h22, {2, 1}), 1);
  EXPECT_EQ(count(h22, {1, 2}), 1);
  EXPECT_EQ(count(h22, {2, 2}), 0);
}

TEST(VertexMomentSum, SmallCases) {
  EXPECT_DOUBLE_EQ(vertex_moment_sum(DegreeTable({1, 1}, {1, 1}), 1, 1), 2.0);
  const DegreeTable d = degrees(bridge_graph({2, 2}));
  EXPECT_DOUBLE_EQ(vertex_moment_sum(d, 1, 1), 4.0);
  EXPECT_DOUBLE_EQ(vertex_moment_sum(d, 1, 2), 6.0);
  EXPECT_DOUBLE_EQ(vertex_moment_sum(d, 0, 0), static_cast<double>(d.node_count()));
  EXPECT_NEAR(vertex_moment_sum(d, 0.5, 0), 3.0 + std::sqrt(2.0), 1e-12);
}

TEST(VertexMomentSum, EdgeVertexIdentityIsExact) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const DirectedGraph g = oracle::random_graph(30, 150, seed);
    const DegreeTable d = degrees(g);
    EXPECT_EQ(vertex_moment_sum_exact(d, 1, 0), static_cast<Int128>(g.edge_count()));
    EXPECT_EQ(vertex_moment_sum_exact(d, 0, 1), static_cast<Int128>(g.edge_count()));
    for (int k = 1; k <= 3; ++k) {
      Int128 src_out = 0, src_in = 0, tgt_out = 0, tgt_in = 0;
      for (const Edge& e : g.edges()) {
        Int128 a = 1, b = 1, c = 1, f = 1;
        for (int i = 0; i < k; ++i) {
          a *= d.out_degree()[e.source];
          b *= d.in_degree()[e.source];
          c *= d.out_degree()[e.target];
          f *= d.in_degree()[e.target];
        }
        src_out += a;
        src_in += b;
        tgt_out += c;
        tgt_in += f;
      }
      // sum_e D^alpha(e_*)^k = sum_v D^+ (D^alpha)^k, and D^- weights on the target side.
      EXPECT_EQ(src_out, vertex_moment_sum_exact(d, k + 1, 0));
      EXPECT_EQ(src_in, vertex_moment_sum_exact(d, 1, k));
      EXPECT_EQ(tgt_out, vertex_moment_sum_exact(d, k, 1));
      EXPECT_EQ(tgt_in, vertex_moment_sum_exact(d, 0, k + 1));
    }
  }
}

TEST(DependencyType, WireNamesRoundTrip) {
  for (DependencyType t : kAllDependencyTypes) EXPECT_EQ(dependency_from_wire(wire_name(t)), t);
  EXPECT_EQ(wire_name(kOutIn), "out_in");
  EXPECT_EQ(display_name(kInOut), "In/Out");
  EXPECT_THROW(dependency_from_wire("up_down"), Error);
}
