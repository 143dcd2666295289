#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "degcorr/generators.hpp"
#include "degcorr/graph.hpp"
#include "degcorr/measures.hpp"

namespace degcorr {

struct RewireReport {
  std::size_t self_loops_removed = 0;
  std::size_t multi_edges_collapsed = 0;
  std::size_t edges_before = 0;
  std::size_t edges_after = 0;
};

struct ConfigModelDraw {
  DirectedGraph graph;
  RewireReport report;
};

/// Prescribed degrees of every node of `d`, in node order.
std::vector<NodeDegrees> node_degrees(const DegreeTable& d);

/// Erased directed configuration model. The in-stub list is shuffled once and
/// zipped against out-stubs in node order (a uniform perfect matching); then
/// self-loops are dropped and parallel edges collapsed, in that order. The
/// surviving edges keep their matching order. Throws UnbalancedStubs when the
/// out- and in-degree sums differ.
ConfigModelDraw erased_configuration_model(std::span<const NodeDegrees> degrees, std::uint64_t seed);

struct BalancedSequence {
  std::vector<NodeDegrees> degrees;
  std::size_t resamples = 0;
};

/// Returns `degrees` unchanged if balanced; otherwise redraws the whole
/// sequence (seed derive_seed(seed, attempt)) until sum(out) == sum(in).
/// Throws BalanceFailed after max_attempts redraws.
BalancedSequence balance_iid_sequence(std::vector<NodeDegrees> degrees, const PowerLawSpec& spec_out,
                                      const PowerLawSpec& spec_in, std::uint64_t seed, std::size_t max_attempts);

/// Balanced i.i.d. power-law degrees pushed through the erased configuration model.
struct IidConfigModelGraph {
  ConfigModelDraw draw;
  std::size_t resamples = 0;
};

IidConfigModelGraph iid_configuration_graph(std::size_t n, const PowerLawSpec& spec_out, const PowerLawSpec& spec_in,
                                            std::uint64_t seed, std::size_t max_attempts);

struct RandomizationCell {
  /// Unset when fewer than one repetition produced a defined value.
  std::optional<double> mean;
  /// Sample standard deviation over the defined repetitions (0 when only one).
  std::optional<double> sigma;
  /// Repetitions that produced a defined value.
  std::size_t repetitions = 0;
  /// Repetitions where the measure was undefined (zero variance or too few edges).
  std::size_t undefined = 0;
};

struct RandomizationSummary {
  /// cells[type][measure], indexed like kAllDependencyTypes and kAllMeasures.
  std::array<std::array<RandomizationCell, 4>, 4> cells;
  std::size_t repetitions = 0;
  std::vector<RewireReport> rewires;

  const RandomizationCell& cell(DependencyType t, MeasureKind m) const;
};

struct RandomizationOptions {
  std::size_t repetitions = 20;
  std::uint64_t seed = 0;
  /// Uniform-tie Spearman values averaged per reconfiguration.
  std::size_t rho_reps = 3;
};

/// Rewires `g` `repetitions` times through the erased configuration model and
/// summarises all 16 (type, measure) values of the rewired graphs.
RandomizationSummary randomization_study(const DirectedGraph& g, const RandomizationOptions& options);

std::size_t type_index(DependencyType t);
std::size_t measure_index(MeasureKind m);

}  // namespace degcorr
