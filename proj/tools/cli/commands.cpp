#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "degcorr/config_model.hpp"
#include "degcorr/error.hpp"
#include "degcorr/generators.hpp"
#include "degcorr/measures.hpp"
#include "degcorr/rng.hpp"
#include "degcorr/theory.hpp"
#include "report.hpp"

namespace degcorr::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

std::vector<DependencyType> parse_types(const std::string& list) {
  if (list == "all") return {std::begin(kAllDependencyTypes), std::end(kAllDependencyTypes)};
  std::vector<DependencyType> r;
  for (const std::string& s : split(list, ',')) r.push_back(dependency_from_wire(s));
  if (r.empty()) throw Error(ErrorCode::invalid_argument, "--types is empty");
  return r;
}

std::vector<MeasureKind> parse_measures(const std::string& list) {
  if (list == "all") return {std::begin(kAllMeasures), std::end(kAllMeasures)};
  std::vector<MeasureKind> r;
  for (const std::string& s : split(list, ',')) r.push_back(measure_from_wire(s));
  if (r.empty()) throw Error(ErrorCode::invalid_argument, "--measures is empty");
  return r;
}

/// Writes to `path`, or to `out` when path is empty or "-".
template <typename F>
void with_output(const std::string& path, std::ostream& out, F&& write) {
  if (path.empty() || path == "-") {
    write(out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::invalid_argument, "cannot write '" + path + "'");
  write(file);
  if (!file) throw Error(ErrorCode::invalid_argument, "write to '" + path + "' failed");
}

void emit_report(std::ostream& out, const CorrelationReport& report, const std::string& format) {
  if (format == "csv") {
    write_csv(out, report);
  } else {
    out << to_json(report).dump(2) << '\n';
  }
}

// ---------------------------------------------------------------------------

struct ComputeArgs {
  std::string input;
  std::string measures = "all";
  std::string types = "all";
  std::uint64_t seed = 0;
  std::size_t rho_reps = 3;
  std::string format = "json";
  std::size_t reps = 20;  // randomize only
};

void add_report_options(CLI::App* cmd, ComputeArgs& a) {
  cmd->add_option("--input", a.input, "Edge-list file (\"src dst\" per line)")->required();
  cmd->add_option("--measures", a.measures, "Comma list of pearson,spearman_uniform,spearman_average,kendall or all")
      ->capture_default_str();
  cmd->add_option("--types", a.types, "Comma list of out_in,out_out,in_in,in_out or all")->capture_default_str();
  cmd->add_option("--seed", a.seed, "Seed for uniform tie-breaking and rewiring")->capture_default_str();
  cmd->add_option("--rho-reps", a.rho_reps, "Uniform-tie Spearman draws averaged per value")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--format", a.format, "Output format")->capture_default_str()->check(CLI::IsMember({"json", "csv"}));
}

void run_compute(const ComputeArgs& a, std::ostream& out) {
  const auto types = parse_types(a.types);
  const auto measures = parse_measures(a.measures);
  const LoadedGraph lg = load_edge_list_file(a.input);
  emit_report(out, compute_report(lg, a.input, types, measures, a.seed, a.rho_reps), a.format);
}

constexpr std::uint64_t kRandomizeStream = 0x6e756c6c;  // "null"

void run_randomize(const ComputeArgs& a, std::ostream& out) {
  const auto types = parse_types(a.types);
  const auto measures = parse_measures(a.measures);
  const LoadedGraph lg = load_edge_list_file(a.input);
  // Observed cells equal `compute` with the same seed; the null model gets its own stream.
  CorrelationReport report = compute_report(lg, a.input, types, measures, a.seed, a.rho_reps);
  const RandomizationSummary summary =
      randomization_study(lg.graph, {a.reps, derive_seed(a.seed, kRandomizeStream), a.rho_reps});
  attach_baseline(report, summary, a.seed);
  emit_report(out, report, a.format);
}

// ---------------------------------------------------------------------------

struct GenerateArgs {
  std::optional<std::int64_t> k;
  std::optional<std::int64_t> m;
  std::optional<std::int64_t> n;
  std::optional<double> a;
  std::optional<double> gamma;
  double gamma_out = 2.5;
  double gamma_in = 2.5;
  std::int64_t xmin = 1;
  std::uint64_t seed = 0;
  std::size_t max_attempts = 1'000'000;
  std::string out;
};

BridgeParams bridge_params(const GenerateArgs& g) {
  if (g.k && g.m) {
    if (g.n || g.a) throw Error(ErrorCode::invalid_argument, "give either --k/--m or --n/--a, not both");
    return {*g.k, *g.m};
  }
  if (g.n && g.a) {
    if (g.k || g.m) throw Error(ErrorCode::invalid_argument, "give either --k/--m or --n/--a, not both");
    if (*g.a != std::floor(*g.a) || *g.a < 1) {
      throw Error(ErrorCode::invalid_argument, "--a must be a positive integer for bridge graphs");
    }
    return {*g.n, static_cast<std::int64_t>(*g.a) * *g.n};
  }
  throw Error(ErrorCode::invalid_argument, "bridge graphs need --k and --m, or --n and --a");
}

void check_bridge(BridgeParams p) {
  if (p.k < 1 || p.m < 1) throw Error(ErrorCode::invalid_argument, "bridge sizes must be >= 1");
}

PowerLawSpec spec_of(double gamma, std::int64_t xmin) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) throw Error(ErrorCode::invalid_argument, "gamma must be > 0");
  if (xmin < 1) throw Error(ErrorCode::invalid_argument, "--xmin must be >= 1");
  return {gamma, xmin};
}

std::size_t positive_size(const std::optional<std::int64_t>& v, const char* flag) {
  if (!v) throw Error(ErrorCode::invalid_argument, std::string(flag) + " is required");
  if (*v < 1) throw Error(ErrorCode::invalid_argument, std::string(flag) + " must be >= 1");
  return static_cast<std::size_t>(*v);
}

DirectedGraph generate(const std::string& family, const GenerateArgs& g, std::ostream& err) {
  if (family == "bridge" || family == "bridge-disconnected") {
    const BridgeParams p = bridge_params(g);
    check_bridge(p);
    return family == "bridge" ? bridge_graph(p) : disconnected_bridge_graph(p);
  }
  if (family == "bridge-collection") {
    if (g.k || g.m) throw Error(ErrorCode::invalid_argument, "bridge-collection takes --n/--a, not --k/--m");
    const std::size_t n = positive_size(g.n, "--n");
    if (!g.a) throw Error(ErrorCode::invalid_argument, "--a is required");
    const RandomBridgeCollection c = random_bridge_collection(n, *g.a, spec_of(g.gamma.value_or(1.5), g.xmin), g.seed);
    if (!c.heavy_tail_regime) err << "warning: gamma outside (1, 2); the Pearson limit is not random here\n";
    return c.graph;
  }
  // iid-cm
  if (g.k || g.m || g.a) throw Error(ErrorCode::invalid_argument, "iid-cm takes --n and tail flags only");
  const std::size_t n = positive_size(g.n, "--n");
  const double go = g.gamma.value_or(g.gamma_out);
  const double gi = g.gamma.value_or(g.gamma_in);
  IidConfigModelGraph r =
      iid_configuration_graph(n, spec_of(go, g.xmin), spec_of(gi, g.xmin), g.seed, g.max_attempts);
  return std::move(r.draw.graph);
}

// ---------------------------------------------------------------------------

struct StudyArgs {
  std::vector<std::size_t> n_grid;
  std::size_t reps = 20;
  std::uint64_t seed = 0;
  std::optional<double> gamma;
  double gamma_out = 2.5;
  double gamma_in = 2.5;
  std::int64_t xmin = 1;
  std::vector<std::string> pq;
  std::string family = "iid";
  std::size_t max_attempts = 1'000'000;
  std::int64_t a_int = 1;
  double a = 10.0;
  std::string measures = "pearson,spearman_average,kendall";
  std::size_t n = 2000;
  std::size_t reals = 100;
};

std::pair<double, double> parse_pq(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() != 2) throw Error(ErrorCode::invalid_argument, "--pq expects 'p,q', got '" + s + "'");
  try {
    const double p = std::stod(parts[0]);
    const double q = std::stod(parts[1]);
    if (!(p >= 0) || !(q >= 0)) throw std::invalid_argument("negative");
    return {p, q};
  } catch (const std::exception&) {
    throw Error(ErrorCode::invalid_argument, "--pq expects two non-negative numbers, got '" + s + "'");
  }
}

void run_scaling(const StudyArgs& s, std::ostream& out) {
  ScalingStudyConfig c;
  if (s.family == "iid") {
    c.family = StudyFamily::iid_degrees;
  } else {
    c.family = StudyFamily::iid_configuration_model;
  }
  c.spec_out = spec_of(s.gamma.value_or(s.gamma_out), s.xmin);
  c.spec_in = spec_of(s.gamma.value_or(s.gamma_in), s.xmin);
  c.sizes = s.n_grid.empty() ? std::vector<std::size_t>{1000, 10000, 100000} : s.n_grid;
  c.repetitions = s.reps;
  c.seed = s.seed;
  c.max_balance_attempts = s.max_attempts;
  c.moments.clear();
  for (const std::string& pq : s.pq.empty() ? std::vector<std::string>{"1,0"} : s.pq) c.moments.push_back(parse_pq(pq));
  const auto series = scaling_study(c);
  out << "n,p,q,sum,predicted_exponent,fitted_slope\n";
  for (const ScalingSeries& r : series) {
    for (const ScalingPoint& pt : r.points) {
      out << pt.n << ',' << format_double(r.p) << ',' << format_double(r.q) << ',' << format_double(pt.median_sum)
          << ',' << format_double(r.predicted_exponent) << ',' << format_double(r.fitted_slope) << '\n';
    }
  }
}

void run_bridge_convergence(const StudyArgs& s, std::ostream& out) {
  if (s.a_int < 1) throw Error(ErrorCode::invalid_argument, "--a must be >= 1");
  const auto measures = parse_measures(s.measures);
  for (MeasureKind m : measures) {
    if (m == MeasureKind::spearman_uniform) {
      throw Error(ErrorCode::invalid_argument, "bridge-convergence has no closed form for spearman_uniform");
    }
  }
  const std::vector<std::size_t> grid = s.n_grid.empty() ? std::vector<std::size_t>{10, 100, 1000} : s.n_grid;
  out << "family,n,a,measure,value,closed_form_value\n";
  for (BridgeVariant variant : {BridgeVariant::connected, BridgeVariant::disconnected}) {
    const bool connected = variant == BridgeVariant::connected;
    for (std::size_t n_ : grid) {
      const auto n = static_cast<std::int64_t>(n_);
      if (n < 1) throw Error(ErrorCode::invalid_argument, "--n-grid entries must be >= 1");
      const BridgeParams p{n, s.a_int * n};
      const DirectedGraph g = connected ? bridge_graph(p) : disconnected_bridge_graph(p);
      for (MeasureKind m : measures) {
        double value = 0.0;
        double closed = 0.0;
        if (m == MeasureKind::pearson) {
          value = pearson(g, kInOut).value;
          closed = connected ? closed_form_pearson_bridge(n, s.a_int) : closed_form_pearson_disconnected_bridge(n, s.a_int);
        } else if (m == MeasureKind::spearman_average) {
          value = spearman_average(g, kInOut).value;
          closed = closed_form_spearman_bridge(n, s.a_int, variant);
        } else {
          value = kendall_tau(g, kInOut).value;
          closed = connected ? closed_form_tau_bridge(n, s.a_int) : closed_form_tau_disconnected_bridge(n, s.a_int);
        }
        out << (connected ? "bridge" : "bridge-disconnected") << ',' << n << ',' << s.a_int << ',' << wire_name(m)
            << ',' << format_double(value) << ',' << format_double(closed) << '\n';
      }
    }
  }
}

void run_bridge_distribution(const StudyArgs& s, std::ostream& out, std::ostream& err) {
  if (s.n < 1 || s.reals < 1) throw Error(ErrorCode::invalid_argument, "--n and --reals must be >= 1");
  const PowerLawSpec spec = spec_of(s.gamma.value_or(1.5), s.xmin);
  out << "realization,edges,value\n";
  bool warned = false;
  for (std::size_t i = 0; i < s.reals; ++i) {
    const RandomBridgeCollection c = random_bridge_collection(s.n, s.a, spec, derive_seed(s.seed, i));
    if (!c.heavy_tail_regime && !warned) {
      err << "warning: gamma outside (1, 2); the Pearson limit is not random here\n";
      warned = true;
    }
    out << i << ',' << c.graph.edge_count() << ',';
    try {
      out << format_double(pearson(c.graph, kInOut).value);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::zero_variance) throw;
    }
    out << '\n';
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Directed degree-degree dependency measures, synthetic graph families and null models", "degcorr"};
  app.require_subcommand(1);

  ComputeArgs compute_args;
  CLI::App* compute = app.add_subcommand("compute", "Correlation report for an edge list");
  add_report_options(compute, compute_args);

  ComputeArgs randomize_args;
  CLI::App* randomize =
      app.add_subcommand("randomize", "Report with an erased-configuration-model baseline per cell");
  add_report_options(randomize, randomize_args);
  randomize->add_option("--reps", randomize_args.reps, "Rewirings")->capture_default_str()->check(CLI::Range(2, 1 << 30));

  GenerateArgs gen;
  CLI::App* generate_cmd = app.add_subcommand("generate", "Write a synthetic graph as an edge list");
  generate_cmd->require_subcommand(1);
  std::string family;
  const std::pair<const char*, const char*> families[] = {
      {"bridge", "G(k, m): k sources -> v -> w -> m sinks (--k/--m or --n/--a)"},
      {"bridge-disconnected", "G(k, m) with the v -> w edge split through a middle node"},
      {"bridge-collection", "Disjoint G(X+Y, X+aY) for n power-law pairs (X, Y)"},
      {"iid-cm", "Erased configuration model on a balanced iid power-law degree sequence"},
  };
  for (const auto& [name, description] : families) {
    CLI::App* sub = generate_cmd->add_subcommand(name, description);
    sub->callback([&family, name] { family = name; });
    sub->add_option("--k", gen.k, "Fan-in size");
    sub->add_option("--m", gen.m, "Fan-out size");
    sub->add_option("--n", gen.n, "Size parameter");
    sub->add_option("--a", gen.a, "Fan-out ratio");
    sub->add_option("--gamma", gen.gamma, "Tail exponent (both sides)");
    sub->add_option("--gamma-out", gen.gamma_out, "Out-degree tail exponent")->capture_default_str();
    sub->add_option("--gamma-in", gen.gamma_in, "In-degree tail exponent")->capture_default_str();
    sub->add_option("--xmin", gen.xmin, "Minimum sampled value")->capture_default_str();
    sub->add_option("--seed", gen.seed, "Seed")->capture_default_str();
    sub->add_option("--max-attempts", gen.max_attempts, "Balancing resamples")->capture_default_str();
    sub->add_option("--out", gen.out, "Output path (default stdout)");
  }

  StudyArgs st;
  CLI::App* study = app.add_subcommand("study", "CSV studies");
  study->require_subcommand(1);
  std::string study_name;
  CLI::App* scaling = study->add_subcommand("scaling", "Growth of sum_v out^p in^q against n");
  scaling->callback([&] { study_name = "scaling"; });
  scaling->add_option("--n-grid", st.n_grid, "Sizes (default 1000,10000,100000)")->delimiter(',');
  scaling->add_option("--reps", st.reps, "Repetitions per size")->capture_default_str()->check(CLI::PositiveNumber);
  scaling->add_option("--seed", st.seed, "Seed")->capture_default_str();
  scaling->add_option("--gamma", st.gamma, "Tail exponent (both sides)");
  scaling->add_option("--gamma-out", st.gamma_out, "Out-degree tail exponent")->capture_default_str();
  scaling->add_option("--gamma-in", st.gamma_in, "In-degree tail exponent")->capture_default_str();
  scaling->add_option("--xmin", st.xmin, "Minimum sampled value")->capture_default_str();
  scaling->add_option("--pq", st.pq, "Moment 'p,q' (repeatable; default 1,0)");
  scaling->add_option("--family", st.family, "Degree family")->capture_default_str()->check(CLI::IsMember({"iid", "iid-cm"}));
  scaling->add_option("--max-attempts", st.max_attempts, "Balancing resamples (iid-cm)")->capture_default_str();

  CLI::App* convergence = study->add_subcommand("bridge-convergence", "In/Out measures of G(n, an) and its split variant vs closed forms");
  convergence->callback([&] { study_name = "bridge-convergence"; });
  convergence->add_option("--a", st.a_int, "Integer fan-out ratio")->capture_default_str();
  convergence->add_option("--n-grid", st.n_grid, "Sizes (default 10,100,1000)")->delimiter(',');
  convergence->add_option("--measures", st.measures, "Comma list of pearson,spearman_average,kendall")
      ->capture_default_str();

  CLI::App* distribution = study->add_subcommand("bridge-distribution", "In/Out Pearson across random bridge collections");
  distribution->callback([&] { study_name = "bridge-distribution"; });
  distribution->add_option("--n", st.n, "Components per collection")->capture_default_str();
  distribution->add_option("--a", st.a, "Fan-out ratio")->capture_default_str();
  distribution->add_option("--gamma", st.gamma, "Tail exponent (default 1.5)");
  distribution->add_option("--xmin", st.xmin, "Minimum sampled value")->capture_default_str();
  distribution->add_option("--reals", st.reals, "Realizations")->capture_default_str();
  distribution->add_option("--seed", st.seed, "Seed")->capture_default_str();

  std::vector<std::string> argv_storage{"degcorr"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (compute->parsed()) {
      run_compute(compute_args, out);
    } else if (randomize->parsed()) {
      run_randomize(randomize_args, out);
    } else if (generate_cmd->parsed()) {
      const DirectedGraph g = generate(family, gen, err);
      with_output(gen.out, out, [&](std::ostream& o) { write_edge_list(o, g); });
    } else if (study_name == "scaling") {
      run_scaling(st, out);
    } else if (study_name == "bridge-convergence") {
      run_bridge_convergence(st, out);
    } else {
      run_bridge_distribution(st, out, err);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternalError;
  }
  return kExitOk;
}

}  // namespace degcorr::cli
