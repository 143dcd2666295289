#include "degcorr/config_model.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "degcorr/error.hpp"
#include "degcorr/rng.hpp"
#include "degcorr/stats.hpp"

namespace degcorr {

std::vector<NodeDegrees> node_degrees(const DegreeTable& d) {
  std::vector<NodeDegrees> r(d.node_count());
  for (std::size_t v = 0; v < r.size(); ++v) r[v] = {d.out_degree()[v], d.in_degree()[v]};
  return r;
}

ConfigModelDraw erased_configuration_model(std::span<const NodeDegrees> degrees, std::uint64_t seed) {
  Degree out_sum = 0;
  Degree in_sum = 0;
  for (const NodeDegrees& nd : degrees) {
    if (nd.out < 0 || nd.in < 0) throw Error(ErrorCode::invalid_argument, "negative prescribed degree");
    out_sum += nd.out;
    in_sum += nd.in;
  }
  if (out_sum != in_sum) {
    throw Error(ErrorCode::unbalanced_stubs, "out-stubs (" + std::to_string(out_sum) + ") and in-stubs (" +
                                                 std::to_string(in_sum) + ") differ");
  }

  const auto stubs = static_cast<std::size_t>(out_sum);
  std::vector<NodeId> in_stubs;
  in_stubs.reserve(stubs);
  for (std::size_t v = 0; v < degrees.size(); ++v) in_stubs.insert(in_stubs.end(), static_cast<std::size_t>(degrees[v].in), static_cast<NodeId>(v));
  Rng rng(seed);
  rng.shuffle(std::span<NodeId>(in_stubs));

  std::vector<Edge> matched;
  matched.reserve(stubs);
  RewireReport report;
  report.edges_before = stubs;
  std::size_t next = 0;
  for (std::size_t v = 0; v < degrees.size(); ++v) {
    for (Degree s = 0; s < degrees[v].out; ++s) {
      const Edge e{static_cast<NodeId>(v), in_stubs[next++]};
      if (e.source == e.target) {
        ++report.self_loops_removed;
      } else {
        matched.push_back(e);
      }
    }
  }

  // Collapse parallel edges, keeping the first copy in matching order.
  std::vector<std::size_t> order(matched.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Edge& x = matched[a];
    const Edge& y = matched[b];
    if (x.source != y.source) return x.source < y.source;
    if (x.target != y.target) return x.target < y.target;
    return a < b;
  });
  std::vector<char> keep(matched.size(), 1);
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (matched[order[i]] == matched[order[i - 1]]) {
      keep[order[i]] = 0;
      ++report.multi_edges_collapsed;
    }
  }
  std::vector<Edge> edges;
  edges.reserve(matched.size() - report.multi_edges_collapsed);
  for (std::size_t i = 0; i < matched.size(); ++i) {
    if (keep[i] != 0) edges.push_back(matched[i]);
  }
  report.edges_after = edges.size();
  return {DirectedGraph(degrees.size(), std::move(edges)), report};
}

namespace {

bool balanced(std::span<const NodeDegrees> degrees) {
  Degree diff = 0;
  for (const NodeDegrees& nd : degrees) diff += nd.out - nd.in;
  return diff == 0;
}

}  // namespace

BalancedSequence balance_iid_sequence(std::vector<NodeDegrees> degrees, const PowerLawSpec& spec_out,
                                      const PowerLawSpec& spec_in, std::uint64_t seed, std::size_t max_attempts) {
  if (max_attempts < 1) throw Error(ErrorCode::invalid_argument, "max_attempts must be >= 1");
  if (balanced(degrees)) return {std::move(degrees), 0};
  const std::size_t n = degrees.size();
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<NodeDegrees> draw = iid_degree_sequence(n, spec_out, spec_in, derive_seed(seed, attempt));
    if (balanced(draw)) return {std::move(draw), attempt + 1};
  }
  throw Error(ErrorCode::balance_failed,
              "no balanced degree sequence after " + std::to_string(max_attempts) + " resamples");
}

IidConfigModelGraph iid_configuration_graph(std::size_t n, const PowerLawSpec& spec_out, const PowerLawSpec& spec_in,
                                            std::uint64_t seed, std::size_t max_attempts) {
  BalancedSequence seq = balance_iid_sequence(iid_degree_sequence(n, spec_out, spec_in, derive_seed(seed, 0)),
                                              spec_out, spec_in, derive_seed(seed, 1), max_attempts);
  return {erased_configuration_model(seq.degrees, derive_seed(seed, 2)), seq.resamples};
}

std::size_t type_index(DependencyType t) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (kAllDependencyTypes[i] == t) return i;
  }
  return 0;
}

std::size_t measure_index(MeasureKind m) { return static_cast<std::size_t>(m); }

const RandomizationCell& RandomizationSummary::cell(DependencyType t, MeasureKind m) const {
  return cells[type_index(t)][measure_index(m)];
}

RandomizationSummary randomization_study(const DirectedGraph& g, const RandomizationOptions& options) {
  if (g.edge_count() == 0) throw Error(ErrorCode::empty_graph, "cannot randomize a graph without edges");
  if (options.repetitions < 2) throw Error(ErrorCode::invalid_argument, "randomization needs repetitions >= 2");
  if (options.rho_reps < 1) throw Error(ErrorCode::invalid_argument, "rho_reps must be >= 1");

  const std::vector<NodeDegrees> prescribed = node_degrees(degrees(g));
  std::array<std::array<std::vector<double>, 4>, 4> samples;
  RandomizationSummary summary;
  summary.repetitions = options.repetitions;

  for (std::size_t r = 0; r < options.repetitions; ++r) {
    const std::uint64_t rep_seed = derive_seed(options.seed, r);
    ConfigModelDraw draw = erased_configuration_model(prescribed, derive_seed(rep_seed, 0));
    summary.rewires.push_back(draw.report);
    const DegreeTable d = degrees(draw.graph);
    for (std::size_t ti = 0; ti < 4; ++ti) {
      for (std::size_t mi = 0; mi < 4; ++mi) {
        try {
          const MeasureValue v = compute_measure(draw.graph, d, kAllDependencyTypes[ti], kAllMeasures[mi],
                                                 derive_seed(rep_seed, 1), options.rho_reps);
          samples[ti][mi].push_back(v.value);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::zero_variance && e.code() != ErrorCode::degenerate_size &&
              e.code() != ErrorCode::empty_graph) {
            throw;
          }
          ++summary.cells[ti][mi].undefined;
        }
      }
    }
  }

  for (std::size_t ti = 0; ti < 4; ++ti) {
    for (std::size_t mi = 0; mi < 4; ++mi) {
      RandomizationCell& c = summary.cells[ti][mi];
      const auto& xs = samples[ti][mi];
      c.repetitions = xs.size();
      if (!xs.empty()) {
        c.mean = mean(xs);
        c.sigma = sample_stddev(xs);
      }
    }
  }
  return summary;
}

}  // namespace degcorr
