#include "degcorr/generators.hpp"

#include <cmath>
#include <string>

#include "degcorr/error.hpp"
#include "degcorr/rng.hpp"

namespace degcorr {

namespace {

void check(BridgeParams p) {
  if (p.k < 1 || p.m < 1) throw Error(ErrorCode::invalid_argument, "bridge graph needs k >= 1 and m >= 1");
}

void check(const PowerLawSpec& s) {
  if (!(s.gamma > 0.0) || !std::isfinite(s.gamma)) {
    throw Error(ErrorCode::invalid_argument, "power law needs a finite gamma > 0");
  }
  if (s.x_min < 1) throw Error(ErrorCode::invalid_argument, "power law needs x_min >= 1");
}

constexpr double kSampleCap = 0x1.0p53;

}  // namespace

std::size_t append_bridge(std::vector<Edge>& edges, NodeId base, BridgeParams p) {
  check(p);
  const auto k = static_cast<NodeId>(p.k);
  const auto m = static_cast<NodeId>(p.m);
  const NodeId v = base;
  const NodeId w = base + 1;
  for (NodeId i = 0; i < k; ++i) edges.push_back({base + 2 + i, v});
  for (NodeId j = 0; j < m; ++j) edges.push_back({w, base + 2 + k + j});
  edges.push_back({v, w});
  return static_cast<std::size_t>(k) + m + 2;
}

DirectedGraph bridge_graph(BridgeParams p) {
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(p.k + p.m + 1));
  const std::size_t nodes = append_bridge(edges, 0, p);
  return DirectedGraph(nodes, std::move(edges));
}

DirectedGraph disconnected_bridge_graph(BridgeParams p) {
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(p.k + p.m + 2));
  const std::size_t nodes = append_bridge(edges, 0, p);
  const auto u = static_cast<NodeId>(nodes);
  edges.back() = {0, u};
  edges.push_back({u, 1});
  return DirectedGraph(nodes + 1, std::move(edges));
}

std::vector<Degree> sample_integer_power_law(const PowerLawSpec& spec, std::uint64_t seed, std::size_t count) {
  check(spec);
  Rng rng(seed);
  const double inv_gamma = 1.0 / spec.gamma;
  const auto x_min = static_cast<double>(spec.x_min);
  std::vector<Degree> out(count);
  for (auto& v : out) {
    const double x = x_min * std::pow(rng.uniform_open0(), -inv_gamma);
    v = static_cast<Degree>(std::floor(std::min(x, kSampleCap)));
  }
  return out;
}

RandomBridgeCollection random_bridge_collection(std::size_t n, double a, const PowerLawSpec& spec,
                                                std::uint64_t seed) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "random bridge collection needs n >= 1");
  if (!(a > 0.0) || !std::isfinite(a)) throw Error(ErrorCode::invalid_argument, "random bridge collection needs a > 0");
  const std::vector<Degree> xs = sample_integer_power_law(spec, derive_seed(seed, 0), n);
  const std::vector<Degree> ys = sample_integer_power_law(spec, derive_seed(seed, 1), n);

  RandomBridgeCollection result;
  result.heavy_tail_regime = spec.gamma > 1.0 && spec.gamma < 2.0;
  result.components.reserve(n);
  std::vector<Edge> edges;
  std::size_t nodes = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Degree w = xs[i] + ys[i];
    const auto z = static_cast<Degree>(std::floor(static_cast<double>(xs[i]) + a * static_cast<double>(ys[i])));
    const BridgeParams p{w, z};
    result.components.push_back(p);
    nodes += append_bridge(edges, static_cast<NodeId>(nodes), p);
  }
  result.graph = DirectedGraph(nodes, std::move(edges));
  return result;
}

std::vector<NodeDegrees> iid_degree_sequence(std::size_t n, const PowerLawSpec& spec_out, const PowerLawSpec& spec_in,
                                            std::uint64_t seed) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "degree sequence needs n >= 1");
  const std::vector<Degree> outs = sample_integer_power_law(spec_out, derive_seed(seed, 0), n);
  const std::vector<Degree> ins = sample_integer_power_law(spec_in, derive_seed(seed, 1), n);
  std::vector<NodeDegrees> pairs(n);
  for (std::size_t i = 0; i < n; ++i) pairs[i] = {outs[i], ins[i]};
  return pairs;
}

}  // namespace degcorr
