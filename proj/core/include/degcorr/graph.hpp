#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "degcorr/exact.hpp"

namespace degcorr {

using NodeId = std::uint32_t;
using Degree = std::int64_t;

struct Edge {
  NodeId source;
  NodeId target;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Edge multiset over dense node ids [0, node_count). Self-loops and parallel
/// edges are kept exactly as given.
class DirectedGraph {
 public:
  DirectedGraph() = default;
  DirectedGraph(std::size_t node_count, std::vector<Edge> edges);

  std::size_t node_count() const noexcept { return node_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  friend bool operator==(const DirectedGraph&, const DirectedGraph&) = default;

 private:
  std::size_t node_count_ = 0;
  std::vector<Edge> edges_;
};

enum class DegreeKind : std::uint8_t { out, in };

std::string_view to_string(DegreeKind kind);

/// Source-side (alpha) and target-side (beta) degree selection of an edge.
struct DependencyType {
  DegreeKind source_kind;
  DegreeKind target_kind;

  friend bool operator==(const DependencyType&, const DependencyType&) = default;
};

inline constexpr DependencyType kOutIn{DegreeKind::out, DegreeKind::in};
inline constexpr DependencyType kOutOut{DegreeKind::out, DegreeKind::out};
inline constexpr DependencyType kInIn{DegreeKind::in, DegreeKind::in};
inline constexpr DependencyType kInOut{DegreeKind::in, DegreeKind::out};

/// The four types in report order: out_in, out_out, in_in, in_out.
inline constexpr DependencyType kAllDependencyTypes[] = {kOutIn, kOutOut, kInIn, kInOut};

/// Wire name, e.g. "in_out" for source in-degree vs target out-degree.
std::string_view wire_name(DependencyType t);
/// Display name as in the literature, e.g. "In/Out".
std::string_view display_name(DependencyType t);
/// Inverse of wire_name; throws Error(invalid_argument) for unknown names.
DependencyType dependency_from_wire(std::string_view name);

class DegreeTable {
 public:
  DegreeTable() = default;
  DegreeTable(std::vector<Degree> out_degree, std::vector<Degree> in_degree);

  std::size_t node_count() const noexcept { return out_.size(); }
  std::span<const Degree> out_degree() const noexcept { return out_; }
  std::span<const Degree> in_degree() const noexcept { return in_; }
  std::span<const Degree> of(DegreeKind kind) const noexcept {
    return kind == DegreeKind::out ? std::span<const Degree>(out_) : std::span<const Degree>(in_);
  }
  /// Sum of out-degrees, equal to the sum of in-degrees for any graph.
  Degree edge_count() const noexcept { return edge_count_; }

 private:
  std::vector<Degree> out_;
  std::vector<Degree> in_;
  Degree edge_count_ = 0;
};

DegreeTable degrees(const DirectedGraph& g);

struct DegreePair {
  Degree x;
  Degree y;

  friend bool operator==(const DegreePair&, const DegreePair&) = default;
};

/// Prescribed (out, in) degrees of one node.
struct NodeDegrees {
  Degree out;
  Degree in;

  friend bool operator==(const NodeDegrees&, const NodeDegrees&) = default;
};

/// One (D^alpha(source), D^beta(target)) observation per edge, in edge order.
struct PairSeries {
  std::vector<DegreePair> pairs;

  std::size_t size() const noexcept { return pairs.size(); }
  std::vector<Degree> xs() const;
  std::vector<Degree> ys() const;
};

PairSeries edge_degree_pairs(const DirectedGraph& g, DependencyType t);
PairSeries edge_degree_pairs(const DirectedGraph& g, const DegreeTable& d, DependencyType t);

/// Sum over nodes of out^p * in^q with 0^0 = 1. Integer exponents 0..3 are
/// accumulated exactly; anything else goes through long double in node order.
double vertex_moment_sum(const DegreeTable& d, double p, double q);
Int128 vertex_moment_sum_exact(const DegreeTable& d, int p, int q);

/// Result of reading an edge list: the graph plus what the reader observed.
struct LoadedGraph {
  DirectedGraph graph;
  /// external_ids[internal] = id as written in the file.
  std::vector<std::uint64_t> external_ids;
  std::size_t self_loops = 0;
  /// Edges that repeat an earlier (source, target) pair.
  std::size_t duplicate_edges = 0;
};

/// Reads "src dst" lines; '#' lines and blank lines are skipped. External ids
/// are remapped to 0..n-1 in first-appearance order.
LoadedGraph load_edge_list(std::istream& in);
LoadedGraph load_edge_list_file(const std::string& path);

/// Writes one "src dst" line per edge using internal ids.
void write_edge_list(std::ostream& out, const DirectedGraph& g);

}  // namespace degcorr
