#pragma once

// CorrelationReport: the per-type, per-measure table printed by `compute` and
// `randomize`, plus its JSON and CSV renderings.

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "degcorr/config_model.hpp"
#include "degcorr/graph.hpp"
#include "degcorr/measures.hpp"

namespace degcorr::cli {

struct GraphInfo {
  std::string path;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t self_loops = 0;
  std::size_t duplicates = 0;
};

struct ReportCell {
  bool selected = false;
  std::optional<double> value;
  /// "zero_variance" or "degenerate_size" when value is null.
  std::optional<std::string> reason;
  std::optional<RandomizationCell> baseline;
};

struct RandomizationInfo {
  std::size_t repetitions = 0;
  std::uint64_t seed = 0;
  std::size_t self_loops_removed = 0;
  std::size_t multi_edges_collapsed = 0;
};

struct CorrelationReport {
  GraphInfo graph;
  std::uint64_t seed = 0;
  std::size_t rho_reps = 3;
  /// cells[type][measure] in kAllDependencyTypes x kAllMeasures order.
  std::array<std::array<ReportCell, 4>, 4> cells;
  std::optional<RandomizationInfo> randomization;
};

inline constexpr int kSchemaVersion = 1;

/// Evaluates the selected cells of `lg.graph`. Undefined measures become null
/// cells with a reason; every other error propagates.
CorrelationReport compute_report(const LoadedGraph& lg, const std::string& path,
                                 const std::vector<DependencyType>& types, const std::vector<MeasureKind>& measures,
                                 std::uint64_t seed, std::size_t rho_reps);

/// Copies the randomized baseline into the selected cells.
void attach_baseline(CorrelationReport& report, const RandomizationSummary& summary, std::uint64_t seed);

nlohmann::ordered_json to_json(const CorrelationReport& report);
void write_csv(std::ostream& out, const CorrelationReport& report);

/// %.17g: round-trips every double.
std::string format_double(double v);

}  // namespace degcorr::cli
