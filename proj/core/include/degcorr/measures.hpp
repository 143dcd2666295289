#pragma once

// Degree-degree dependency measures over the edge multiset of a directed graph.
//
// Rank convention: descending. Rank 1 goes to the LARGEST value, i.e.
// R(x_j) = |{i : x_i >= x_j}| for distinct values. Most statistics packages
// rank ascending; Spearman's rho and Kendall's tau are unchanged when both
// sides are reversed together, so the sign of every value is the usual one.

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "degcorr/exact.hpp"
#include "degcorr/graph.hpp"
#include "degcorr/stats.hpp"

namespace degcorr {

enum class MeasureKind : std::uint8_t { pearson, spearman_uniform, spearman_average, kendall };

inline constexpr MeasureKind kAllMeasures[] = {MeasureKind::pearson, MeasureKind::spearman_uniform,
                                               MeasureKind::spearman_average, MeasureKind::kendall};

std::string_view wire_name(MeasureKind m);
MeasureKind measure_from_wire(std::string_view name);

struct MeasureValue {
  double value;
  MeasureKind measure;
  DependencyType dependency;
};

// ---------------------------------------------------------------------------
// Ranking

/// How tied values receive ranks.
class TiePolicy {
 public:
  enum class Kind : std::uint8_t { uniform_random, by_index, by_reverse_index, average };

  static TiePolicy uniform_random(std::uint64_t seed) { return TiePolicy(Kind::uniform_random, seed); }
  static TiePolicy by_index() { return TiePolicy(Kind::by_index, 0); }
  static TiePolicy by_reverse_index() { return TiePolicy(Kind::by_reverse_index, 0); }
  static TiePolicy average() { return TiePolicy(Kind::average, 0); }

  Kind kind() const noexcept { return kind_; }
  std::uint64_t seed() const noexcept { return seed_; }
  /// True when every tie is broken, so ranks form a permutation of 1..n.
  bool is_permutation() const noexcept { return kind_ != Kind::average; }

 private:
  TiePolicy(Kind k, std::uint64_t s) : kind_(k), seed_(s) {}
  Kind kind_;
  std::uint64_t seed_;
};

/// Ranks stored exactly as twice their value (ranks are multiples of 1/2).
struct RankVector {
  std::vector<std::int64_t> twice;

  std::size_t size() const noexcept { return twice.size(); }
  double operator[](std::size_t i) const { return 0.5 * static_cast<double>(twice[i]); }
};

/// Descending ranks of `values` under `policy`.
///  - average: |{j : x_j > x_i}| + (|{j : x_j = x_i}| + 1) / 2
///  - by_index / by_reverse_index: ties ordered by ascending / descending position
///  - uniform_random: a uniformly random order inside every tie group, drawn
///    from a stream seeded by policy.seed()
RankVector rank_with_ties(std::span<const Degree> values, TiePolicy policy);

// ---------------------------------------------------------------------------
// Pearson

/// Vertex-sum components of the Pearson coefficient; every field is exact.
struct PearsonSums {
  Int128 edges = 0;          // |E|
  Int128 cross = 0;          // sum_e D^a(e_*) D^b(e^*)
  Int128 source_first = 0;   // sum_v D^+(v) D^a(v)
  Int128 source_second = 0;  // sum_v D^+(v) D^a(v)^2
  Int128 target_first = 0;   // sum_v D^-(v) D^b(v)
  Int128 target_second = 0;  // sum_v D^-(v) D^b(v)^2

  /// |E|^2 times the covariance, exact.
  Int128 numerator() const { return edges * cross - source_first * target_first; }
  Int128 source_spread() const { return edges * source_second - source_first * source_first; }
  Int128 target_spread() const { return edges * target_second - target_first * target_first; }
};

PearsonSums pearson_sums(const DirectedGraph& g, const DegreeTable& d, DependencyType t);

/// Pearson's alpha-beta coefficient from vertex sums with one final division.
/// Throws EmptyGraph for |E| = 0 and ZeroVariance when either side is constant.
MeasureValue pearson(const DirectedGraph& g, DependencyType t);
MeasureValue pearson(const DirectedGraph& g, const DegreeTable& d, DependencyType t);

/// Same coefficient computed directly from the per-edge pairs (edge form,
/// two-pass long double). Independent route used to cross-check pearson().
double pearson_edge_form(const PairSeries& p);

/// |E| * sum_v D^alpha(v) D^beta(v)^2 - (sum_v D^alpha(v) D^beta(v))^2, with
/// |E| = sum_v D^alpha(v). Never negative; zero exactly when every node with
/// D^alpha > 0 has the same D^beta.
Int128 weighted_variance_gap(const DegreeTable& d, DegreeKind alpha, DegreeKind beta);

// ---------------------------------------------------------------------------
// Spearman

/// Spearman's rho from two permutation rankings:
/// (12 sum R^a R^b - 3|E|(|E|+1)^2) / (|E|^3 - |E|).
double spearman_from_permutation_ranks(const RankVector& source, const RankVector& target);

/// Rho with the given tie policies on each side; both must break all ties.
MeasureValue spearman_ranked(const DirectedGraph& g, DependencyType t, TiePolicy source_policy,
                             TiePolicy target_policy);

/// Rho with ties resolved uniformly at random. Source and target ranks use
/// the independent streams derive_seed(seed, 0) and derive_seed(seed, 1).
MeasureValue spearman_uniform(const DirectedGraph& g, DependencyType t, std::uint64_t seed);
double spearman_uniform(const PairSeries& p, std::uint64_t seed);

/// Mean and standard error of spearman_uniform over `repetitions` seeds
/// derive_seed(seed, 0..repetitions-1). repetitions >= 2.
MeanEstimate spearman_uniform_mean(const DirectedGraph& g, DependencyType t, std::size_t repetitions,
                                   std::uint64_t seed);
MeanEstimate spearman_uniform_mean(const PairSeries& p, std::size_t repetitions, std::uint64_t seed);

/// Exact pieces of the average-rank Spearman, all scaled by 4:
/// numerator = 4 sum Rbar^a Rbar^b - |E|(|E|+1)^2 and the two squared sigma-bars.
struct AverageRankSums {
  Int128 edges = 0;
  Int128 numerator = 0;
  Int128 source_sigma_sq = 0;
  Int128 target_sigma_sq = 0;
};

AverageRankSums average_rank_sums(const PairSeries& p);

/// Spearman's rho with average ranks for ties. ZeroVariance when all source or
/// all target values are tied.
MeasureValue spearman_average(const DirectedGraph& g, DependencyType t);
double spearman_average(const PairSeries& p);

/// Right side of E[rho] = 3 sigmabar_a sigmabar_b / (|E|^3 - |E|) * rhobar,
/// i.e. the expectation of the uniform-tie Spearman implied by average ranks.
double expected_spearman_uniform(const PairSeries& p);

// ---------------------------------------------------------------------------
// Kendall

struct ConcordanceCounts {
  std::int64_t concordant = 0;
  std::int64_t discordant = 0;
};

/// Strictly concordant / discordant pair counts in O(m log m).
ConcordanceCounts concordance_counts(const PairSeries& p);

/// Kendall's tau-a: 2 (N_c - N_d) / (|E| (|E| - 1)).
MeasureValue kendall_tau(const DirectedGraph& g, DependencyType t);
double kendall_tau(const PairSeries& p);

// ---------------------------------------------------------------------------

/// All four measures of one dependency type. Spearman-uniform is averaged over
/// `rho_reps` seeds derive_seed(seed, i). Errors propagate per measure.
MeasureValue compute_measure(const DirectedGraph& g, const DegreeTable& d, DependencyType t,
                             MeasureKind m, std::uint64_t seed, std::size_t rho_reps);

}  // namespace degcorr
