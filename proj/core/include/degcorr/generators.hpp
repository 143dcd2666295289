#pragma once

#include <cstdint>
#include <vector>

#include "degcorr/graph.hpp"

namespace degcorr {

/// Fan-in size k and fan-out size m of a bridge graph; both >= 1.
struct BridgeParams {
  Degree k;
  Degree m;
};

/// Tail exponent and minimum of an integer Pareto law floor(x_min * U^(-1/gamma)).
struct PowerLawSpec {
  double gamma;
  Degree x_min = 1;
};

/// k sources -> v -> w -> m sinks. Node ids: v = 0, w = 1, v_i = 2..k+1,
/// w_j = k+2..k+m+1. Edge order: (v_i, v) for i = 1..k, then (w, w_j) for
/// j = 1..m, then the bridge (v, w).
DirectedGraph bridge_graph(BridgeParams p);

/// bridge_graph with (v, w) replaced by (v, u), (u, w); u = k+m+2.
DirectedGraph disconnected_bridge_graph(BridgeParams p);

/// Appends a bridge graph to `edges` with node ids offset by `base`.
/// Returns the number of nodes used (k + m + 2).
std::size_t append_bridge(std::vector<Edge>& edges, NodeId base, BridgeParams p);

/// i.i.d. draws of floor(x_min * U^(-1/gamma)), U uniform on (0, 1].
/// Values are capped at 2^53 so they stay exact in every downstream sum.
std::vector<Degree> sample_integer_power_law(const PowerLawSpec& spec, std::uint64_t seed, std::size_t count);

struct RandomBridgeCollection {
  DirectedGraph graph;
  /// (W_i, Z_i) = (X_i + Y_i, floor(X_i + a Y_i)), in component order.
  std::vector<BridgeParams> components;
  /// False when gamma is outside (1, 2), the regime with a random limit.
  bool heavy_tail_regime = true;
};

/// Disjoint union of G(W_i, Z_i), i = 1..n. X and Y come from independent
/// streams; each component occupies a contiguous block of node ids.
RandomBridgeCollection random_bridge_collection(std::size_t n, double a, const PowerLawSpec& spec,
                                                std::uint64_t seed);

/// n independent (out, in) pairs. Not balanced in general.
std::vector<NodeDegrees> iid_degree_sequence(std::size_t n, const PowerLawSpec& spec_out, const PowerLawSpec& spec_in,
                                            std::uint64_t seed);

}  // namespace degcorr
