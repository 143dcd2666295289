#include "degcorr/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <string>
#include <unordered_map>

#include "degcorr/error.hpp"

namespace degcorr {

DirectedGraph::DirectedGraph(std::size_t node_count, std::vector<Edge> edges)
    : node_count_(node_count), edges_(std::move(edges)) {
  for (const Edge& e : edges_) {
    if (e.source >= node_count_ || e.target >= node_count_) {
      throw Error(ErrorCode::invalid_argument, "edge endpoint out of range");
    }
  }
}

std::string_view to_string(DegreeKind kind) { return kind == DegreeKind::out ? "out" : "in"; }

std::string_view wire_name(DependencyType t) {
  if (t == kOutIn) return "out_in";
  if (t == kOutOut) return "out_out";
  if (t == kInIn) return "in_in";
  return "in_out";
}

std::string_view display_name(DependencyType t) {
  if (t == kOutIn) return "Out/In";
  if (t == kOutOut) return "Out/Out";
  if (t == kInIn) return "In/In";
  return "In/Out";
}

DependencyType dependency_from_wire(std::string_view name) {
  for (DependencyType t : kAllDependencyTypes) {
    if (wire_name(t) == name) return t;
  }
  throw Error(ErrorCode::invalid_argument, "unknown dependency type '" + std::string(name) + "'");
}

DegreeTable::DegreeTable(std::vector<Degree> out_degree, std::vector<Degree> in_degree)
    : out_(std::move(out_degree)), in_(std::move(in_degree)) {
  if (out_.size() != in_.size()) {
    throw Error(ErrorCode::invalid_argument, "degree table sides differ in length");
  }
  Degree out_sum = 0;
  Degree in_sum = 0;
  for (std::size_t v = 0; v < out_.size(); ++v) {
    if (out_[v] < 0 || in_[v] < 0) throw Error(ErrorCode::invalid_argument, "negative degree");
    out_sum += out_[v];
    in_sum += in_[v];
  }
  if (out_sum != in_sum) {
    throw Error(ErrorCode::invalid_argument, "degree table is not balanced");
  }
  edge_count_ = out_sum;
}

DegreeTable degrees(const DirectedGraph& g) {
  std::vector<Degree> out(g.node_count(), 0);
  std::vector<Degree> in(g.node_count(), 0);
  for (const Edge& e : g.edges()) {
    ++out[e.source];
    ++in[e.target];
  }
  return DegreeTable(std::move(out), std::move(in));
}

std::vector<Degree> PairSeries::xs() const {
  std::vector<Degree> r(pairs.size());
  std::transform(pairs.begin(), pairs.end(), r.begin(), [](const DegreePair& p) { return p.x; });
  return r;
}

std::vector<Degree> PairSeries::ys() const {
  std::vector<Degree> r(pairs.size());
  std::transform(pairs.begin(), pairs.end(), r.begin(), [](const DegreePair& p) { return p.y; });
  return r;
}

PairSeries edge_degree_pairs(const DirectedGraph& g, const DegreeTable& d, DependencyType t) {
  const auto src = d.of(t.source_kind);
  const auto tgt = d.of(t.target_kind);
  PairSeries series;
  series.pairs.reserve(g.edge_count());
  for (const Edge& e : g.edges()) series.pairs.push_back({src[e.source], tgt[e.target]});
  return series;
}

PairSeries edge_degree_pairs(const DirectedGraph& g, DependencyType t) {
  return edge_degree_pairs(g, degrees(g), t);
}

namespace {

Int128 ipow(Degree base, int exp) {
  Int128 r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

bool is_small_integer(double v) { return v >= 0.0 && v <= 3.0 && std::floor(v) == v; }

}  // namespace

Int128 vertex_moment_sum_exact(const DegreeTable& d, int p, int q) {
  if (p < 0 || q < 0) throw Error(ErrorCode::invalid_argument, "negative moment exponent");
  const auto out = d.out_degree();
  const auto in = d.in_degree();
  Int128 sum = 0;
  for (std::size_t v = 0; v < out.size(); ++v) sum += ipow(out[v], p) * ipow(in[v], q);
  return sum;
}

double vertex_moment_sum(const DegreeTable& d, double p, double q) {
  if (!std::isfinite(p) || !std::isfinite(q) || p < 0.0 || q < 0.0) {
    throw Error(ErrorCode::invalid_argument, "moment exponents must be finite and non-negative");
  }
  if (is_small_integer(p) && is_small_integer(q)) {
    return static_cast<double>(
        to_long_double(vertex_moment_sum_exact(d, static_cast<int>(p), static_cast<int>(q))));
  }
  const auto out = d.out_degree();
  const auto in = d.in_degree();
  long double sum = 0.0L;
  for (std::size_t v = 0; v < out.size(); ++v) {
    // std::pow(0, 0) == 1, matching the convention.
    sum += std::pow(static_cast<long double>(out[v]), static_cast<long double>(p)) *
           std::pow(static_cast<long double>(in[v]), static_cast<long double>(q));
  }
  return static_cast<double>(sum);
}

namespace {

bool is_blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return c == ' ' || c == '\t' || c == '\r'; });
}

std::string_view trim_left(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

std::uint64_t parse_id(std::string_view& rest, std::size_t line_no) {
  rest = trim_left(rest);
  if (rest.empty()) throw ParseError(line_no, "expected two node ids");
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
  if (ec == std::errc::result_out_of_range) throw ParseError(line_no, "node id out of range");
  if (ec != std::errc() || ptr == rest.data()) throw ParseError(line_no, "node id is not a non-negative integer");
  if (value > static_cast<std::uint64_t>(INT64_MAX)) throw ParseError(line_no, "node id exceeds 2^63-1");
  rest.remove_prefix(static_cast<std::size_t>(ptr - rest.data()));
  if (!rest.empty() && rest.front() != ' ' && rest.front() != '\t' && rest.front() != '\r') {
    throw ParseError(line_no, "node id is not a non-negative integer");
  }
  return value;
}

}  // namespace

LoadedGraph load_edge_list(std::istream& in) {
  LoadedGraph result;
  std::unordered_map<std::uint64_t, NodeId> remap;
  std::vector<Edge> edges;
  auto intern = [&](std::uint64_t id) {
    auto [it, inserted] = remap.try_emplace(id, static_cast<NodeId>(result.external_ids.size()));
    if (inserted) result.external_ids.push_back(id);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view rest = trim_left(line);
    if (rest.empty() || rest.front() == '#' || is_blank(rest)) continue;
    const std::uint64_t src = parse_id(rest, line_no);
    const std::uint64_t dst = parse_id(rest, line_no);
    if (!is_blank(rest)) throw ParseError(line_no, "trailing characters after two node ids");
    edges.push_back({intern(src), intern(dst)});
  }
  if (in.bad()) throw Error(ErrorCode::parse_error, "read error");

  for (const Edge& e : edges) result.self_loops += e.source == e.target ? 1 : 0;
  {
    std::vector<Edge> sorted = edges;
    std::sort(sorted.begin(), sorted.end(), [](const Edge& a, const Edge& b) {
      return a.source != b.source ? a.source < b.source : a.target < b.target;
    });
    for (std::size_t i = 1; i < sorted.size(); ++i) result.duplicate_edges += sorted[i] == sorted[i - 1] ? 1 : 0;
  }
  result.graph = DirectedGraph(result.external_ids.size(), std::move(edges));
  return result;
}

LoadedGraph load_edge_list_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::invalid_argument, "cannot open '" + path + "'");
  return load_edge_list(in);
}

void write_edge_list(std::ostream& out, const DirectedGraph& g) {
  std::string buffer;
  buffer.reserve(g.edge_count() * 12);
  for (const Edge& e : g.edges()) {
    buffer += std::to_string(e.source);
    buffer += ' ';
    buffer += std::to_string(e.target);
    buffer += '\n';
  }
  out << buffer;
}

}  // namespace degcorr
