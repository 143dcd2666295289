#include "report.hpp"

#include <cstdio>

#include "degcorr/error.hpp"

namespace degcorr::cli {

namespace {

std::string reason_for(ErrorCode code) {
  // Fewer than two edges and no edges at all are both "too small to rank".
  if (code == ErrorCode::zero_variance) return "zero_variance";
  return "degenerate_size";
}

bool is_undefined(ErrorCode code) {
  return code == ErrorCode::zero_variance || code == ErrorCode::degenerate_size || code == ErrorCode::empty_graph;
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

CorrelationReport compute_report(const LoadedGraph& lg, const std::string& path,
                                 const std::vector<DependencyType>& types, const std::vector<MeasureKind>& measures,
                                 std::uint64_t seed, std::size_t rho_reps) {
  CorrelationReport report;
  report.graph = {path, lg.graph.node_count(), lg.graph.edge_count(), lg.self_loops, lg.duplicate_edges};
  report.seed = seed;
  report.rho_reps = rho_reps;
  const DegreeTable d = degrees(lg.graph);
  for (DependencyType t : types) {
    for (MeasureKind m : measures) {
      ReportCell& cell = report.cells[type_index(t)][measure_index(m)];
      cell.selected = true;
      try {
        cell.value = compute_measure(lg.graph, d, t, m, seed, rho_reps).value;
      } catch (const Error& e) {
        if (!is_undefined(e.code())) throw;
        cell.reason = reason_for(e.code());
      }
    }
  }
  return report;
}

void attach_baseline(CorrelationReport& report, const RandomizationSummary& summary, std::uint64_t seed) {
  RandomizationInfo info;
  info.repetitions = summary.repetitions;
  info.seed = seed;
  for (const RewireReport& r : summary.rewires) {
    info.self_loops_removed += r.self_loops_removed;
    info.multi_edges_collapsed += r.multi_edges_collapsed;
  }
  report.randomization = info;
  for (std::size_t t = 0; t < 4; ++t) {
    for (std::size_t m = 0; m < 4; ++m) {
      if (report.cells[t][m].selected) report.cells[t][m].baseline = summary.cells[t][m];
    }
  }
}

nlohmann::ordered_json to_json(const CorrelationReport& report) {
  using json = nlohmann::ordered_json;
  json j;
  j["schema_version"] = kSchemaVersion;
  j["graph"] = {{"path", report.graph.path},
                {"nodes", report.graph.nodes},
                {"edges", report.graph.edges},
                {"self_loops", report.graph.self_loops},
                {"duplicates", report.graph.duplicates}};
  j["parameters"] = {{"seed", report.seed}, {"rho_reps", report.rho_reps}};
  if (report.randomization) {
    const RandomizationInfo& r = *report.randomization;
    j["randomization"] = {{"repetitions", r.repetitions},
                          {"seed", r.seed},
                          {"self_loops_removed", r.self_loops_removed},
                          {"multi_edges_collapsed", r.multi_edges_collapsed}};
  }
  json correlations = json::object();
  for (std::size_t t = 0; t < 4; ++t) {
    json row = json::object();
    for (std::size_t m = 0; m < 4; ++m) {
      const ReportCell& c = report.cells[t][m];
      if (!c.selected) continue;
      json cell;
      cell["value"] = c.value ? json(*c.value) : json(nullptr);
      cell["reason"] = c.reason ? json(*c.reason) : json(nullptr);
      if (c.baseline) {
        const RandomizationCell& b = *c.baseline;
        cell["baseline"] = {{"mean", b.mean ? json(*b.mean) : json(nullptr)},
                            {"sigma", b.sigma ? json(*b.sigma) : json(nullptr)},
                            {"repetitions", b.repetitions},
                            {"undefined", b.undefined}};
      }
      row[std::string(wire_name(kAllMeasures[m]))] = std::move(cell);
    }
    if (!row.empty()) correlations[std::string(wire_name(kAllDependencyTypes[t]))] = std::move(row);
  }
  j["correlations"] = std::move(correlations);
  return j;
}

void write_csv(std::ostream& out, const CorrelationReport& report) {
  const bool baseline = report.randomization.has_value();
  out << "type,measure,value,reason";
  if (baseline) out << ",baseline_mean,baseline_sigma,baseline_repetitions,baseline_undefined";
  out << '\n';
  auto opt = [](const std::optional<double>& v) { return v ? format_double(*v) : std::string(); };
  for (std::size_t t = 0; t < 4; ++t) {
    for (std::size_t m = 0; m < 4; ++m) {
      const ReportCell& c = report.cells[t][m];
      if (!c.selected) continue;
      out << wire_name(kAllDependencyTypes[t]) << ',' << wire_name(kAllMeasures[m]) << ',' << opt(c.value) << ','
          << c.reason.value_or("");
      if (baseline) {
        const RandomizationCell b = c.baseline.value_or(RandomizationCell{});
        out << ',' << opt(b.mean) << ',' << opt(b.sigma) << ',' << b.repetitions << ',' << b.undefined;
      }
      out << '\n';
    }
  }
}

}  // namespace degcorr::cli
