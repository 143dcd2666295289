#include "degcorr/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "degcorr/error.hpp"
#include "degcorr/rng.hpp"

namespace degcorr {

std::string_view wire_name(MeasureKind m) {
  switch (m) {
    case MeasureKind::pearson: return "pearson";
    case MeasureKind::spearman_uniform: return "spearman_uniform";
    case MeasureKind::spearman_average: return "spearman_average";
    case MeasureKind::kendall: return "kendall";
  }
  return "unknown";
}

MeasureKind measure_from_wire(std::string_view name) {
  for (MeasureKind m : kAllMeasures) {
    if (wire_name(m) == name) return m;
  }
  throw Error(ErrorCode::invalid_argument, "unknown measure '" + std::string(name) + "'");
}

namespace {

double clamp_unit(long double v) { return static_cast<double>(std::clamp(v, -1.0L, 1.0L)); }

// num / (sqrt(a) sqrt(b)) with a, b > 0, evaluated once in long double.
double correlation_ratio(Int128 num, Int128 a, Int128 b) {
  return clamp_unit(to_long_double(num) / (std::sqrt(to_long_double(a)) * std::sqrt(to_long_double(b))));
}

void require_edges(std::size_t m) {
  if (m == 0) throw Error(ErrorCode::empty_graph, "graph has no edges");
}

void require_rank_size(std::size_t m) {
  require_edges(m);
  if (m < 2) throw Error(ErrorCode::degenerate_size, "rank correlation needs at least two edges");
}

}  // namespace

// ---------------------------------------------------------------------------
// Pearson

PearsonSums pearson_sums(const DirectedGraph& g, const DegreeTable& d, DependencyType t) {
  PearsonSums s;
  s.edges = static_cast<Int128>(g.edge_count());
  const auto out = d.out_degree();
  const auto in = d.in_degree();
  const auto alpha = d.of(t.source_kind);
  const auto beta = d.of(t.target_kind);
  for (const Edge& e : g.edges()) s.cross += static_cast<Int128>(alpha[e.source]) * beta[e.target];
  for (std::size_t v = 0; v < d.node_count(); ++v) {
    const Int128 a = alpha[v];
    const Int128 b = beta[v];
    s.source_first += out[v] * a;
    s.source_second += out[v] * a * a;
    s.target_first += in[v] * b;
    s.target_second += in[v] * b * b;
  }
  return s;
}

MeasureValue pearson(const DirectedGraph& g, const DegreeTable& d, DependencyType t) {
  require_edges(g.edge_count());
  const PearsonSums s = pearson_sums(g, d, t);
  const Int128 sa = s.source_spread();
  const Int128 sb = s.target_spread();
  if (sa == 0 || sb == 0) {
    throw Error(ErrorCode::zero_variance, std::string("Pearson ") + std::string(display_name(t)) +
                                              " undefined: " + (sa == 0 ? "source" : "target") +
                                              " degrees are constant over edges");
  }
  return {correlation_ratio(s.numerator(), sa, sb), MeasureKind::pearson, t};
}

MeasureValue pearson(const DirectedGraph& g, DependencyType t) { return pearson(g, degrees(g), t); }

double pearson_edge_form(const PairSeries& p) {
  require_edges(p.size());
  const auto m = static_cast<long double>(p.size());
  long double sx = 0.0L;
  long double sy = 0.0L;
  for (const DegreePair& q : p.pairs) {
    sx += static_cast<long double>(q.x);
    sy += static_cast<long double>(q.y);
  }
  const long double mx = sx / m;
  const long double my = sy / m;
  long double cxy = 0.0L;
  long double cxx = 0.0L;
  long double cyy = 0.0L;
  for (const DegreePair& q : p.pairs) {
    const long double dx = static_cast<long double>(q.x) - mx;
    const long double dy = static_cast<long double>(q.y) - my;
    cxy += dx * dy;
    cxx += dx * dx;
    cyy += dy * dy;
  }
  if (cxx == 0.0L || cyy == 0.0L) throw Error(ErrorCode::zero_variance, "constant side in edge-form Pearson");
  return clamp_unit(cxy / (std::sqrt(cxx) * std::sqrt(cyy)));
}

Int128 weighted_variance_gap(const DegreeTable& d, DegreeKind alpha, DegreeKind beta) {
  const auto w = d.of(alpha);
  const auto b = d.of(beta);
  Int128 total = 0;
  Int128 first = 0;
  Int128 second = 0;
  for (std::size_t v = 0; v < d.node_count(); ++v) {
    total += w[v];
    first += static_cast<Int128>(w[v]) * b[v];
    second += static_cast<Int128>(w[v]) * b[v] * b[v];
  }
  return total * second - first * first;
}

// ---------------------------------------------------------------------------
// Spearman

double spearman_from_permutation_ranks(const RankVector& source, const RankVector& target) {
  if (source.size() != target.size()) throw Error(ErrorCode::invalid_argument, "rank vectors differ in length");
  require_rank_size(source.size());
  const auto m = static_cast<Int128>(source.size());
  Int128 cross = 0;  // sum (2R)(2R) = 4 sum R R
  for (std::size_t i = 0; i < source.size(); ++i) cross += static_cast<Int128>(source.twice[i]) * target.twice[i];
  const Int128 num = 3 * cross - 3 * m * (m + 1) * (m + 1);
  const Int128 den = m * m * m - m;
  return clamp_unit(to_long_double(num) / to_long_double(den));
}

namespace {

double spearman_ranked_pairs(const PairSeries& p, TiePolicy source_policy, TiePolicy target_policy) {
  if (!source_policy.is_permutation() || !target_policy.is_permutation()) {
    throw Error(ErrorCode::invalid_argument, "spearman_ranked needs tie-breaking policies; use spearman_average");
  }
  require_rank_size(p.size());
  const auto xs = p.xs();
  const auto ys = p.ys();
  return spearman_from_permutation_ranks(rank_with_ties(xs, source_policy), rank_with_ties(ys, target_policy));
}

}  // namespace

MeasureValue spearman_ranked(const DirectedGraph& g, DependencyType t, TiePolicy source_policy,
                             TiePolicy target_policy) {
  return {spearman_ranked_pairs(edge_degree_pairs(g, t), source_policy, target_policy),
          MeasureKind::spearman_uniform, t};
}

double spearman_uniform(const PairSeries& p, std::uint64_t seed) {
  return spearman_ranked_pairs(p, TiePolicy::uniform_random(derive_seed(seed, 0)),
                               TiePolicy::uniform_random(derive_seed(seed, 1)));
}

MeasureValue spearman_uniform(const DirectedGraph& g, DependencyType t, std::uint64_t seed) {
  return {spearman_uniform(edge_degree_pairs(g, t), seed), MeasureKind::spearman_uniform, t};
}

MeanEstimate spearman_uniform_mean(const PairSeries& p, std::size_t repetitions, std::uint64_t seed) {
  if (repetitions < 2) throw Error(ErrorCode::invalid_argument, "spearman_uniform_mean needs repetitions >= 2");
  require_rank_size(p.size());
  const auto xs = p.xs();
  const auto ys = p.ys();
  std::vector<double> values(repetitions);
  for (std::size_t r = 0; r < repetitions; ++r) {
    const std::uint64_t s = derive_seed(seed, r);
    values[r] = spearman_from_permutation_ranks(rank_with_ties(xs, TiePolicy::uniform_random(derive_seed(s, 0))),
                                                rank_with_ties(ys, TiePolicy::uniform_random(derive_seed(s, 1))));
  }
  return mean_estimate(values);
}

MeanEstimate spearman_uniform_mean(const DirectedGraph& g, DependencyType t, std::size_t repetitions,
                                   std::uint64_t seed) {
  return spearman_uniform_mean(edge_degree_pairs(g, t), repetitions, seed);
}

AverageRankSums average_rank_sums(const PairSeries& p) {
  require_rank_size(p.size());
  const auto xs = p.xs();
  const auto ys = p.ys();
  const RankVector rx = rank_with_ties(xs, TiePolicy::average());
  const RankVector ry = rank_with_ties(ys, TiePolicy::average());
  AverageRankSums s;
  s.edges = static_cast<Int128>(p.size());
  const Int128 offset = s.edges * (s.edges + 1) * (s.edges + 1);
  Int128 cross = 0;
  Int128 xx = 0;
  Int128 yy = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Int128 a = rx.twice[i];
    const Int128 b = ry.twice[i];
    cross += a * b;
    xx += a * a;
    yy += b * b;
  }
  s.numerator = cross - offset;
  s.source_sigma_sq = xx - offset;
  s.target_sigma_sq = yy - offset;
  return s;
}

double spearman_average(const PairSeries& p) {
  const AverageRankSums s = average_rank_sums(p);
  if (s.source_sigma_sq == 0 || s.target_sigma_sq == 0) {
    throw Error(ErrorCode::zero_variance, std::string("average-rank Spearman undefined: all ") +
                                              (s.source_sigma_sq == 0 ? "source" : "target") +
                                              " values are tied");
  }
  return correlation_ratio(s.numerator, s.source_sigma_sq, s.target_sigma_sq);
}

MeasureValue spearman_average(const DirectedGraph& g, DependencyType t) {
  return {spearman_average(edge_degree_pairs(g, t)), MeasureKind::spearman_average, t};
}

double expected_spearman_uniform(const PairSeries& p) {
  const AverageRankSums s = average_rank_sums(p);
  const Int128 den = s.edges * s.edges * s.edges - s.edges;
  return static_cast<double>(3.0L * to_long_double(s.numerator) / to_long_double(den));
}

// ---------------------------------------------------------------------------
// Kendall

namespace {

std::int64_t pairs_of(std::int64_t s) { return s * (s - 1) / 2; }

// Counts i < j with ys[i] > ys[j] while sorting ys ascending.
std::int64_t count_inversions(std::vector<Degree>& ys) {
  const std::size_t n = ys.size();
  std::vector<Degree> buffer(n);
  std::int64_t inversions = 0;
  for (std::size_t width = 1; width < n; width *= 2) {
    for (std::size_t lo = 0; lo < n; lo += 2 * width) {
      const std::size_t mid = std::min(lo + width, n);
      const std::size_t hi = std::min(lo + 2 * width, n);
      std::size_t i = lo;
      std::size_t j = mid;
      std::size_t k = lo;
      while (i < mid && j < hi) {
        if (ys[i] <= ys[j]) {
          buffer[k++] = ys[i++];
        } else {
          inversions += static_cast<std::int64_t>(mid - i);
          buffer[k++] = ys[j++];
        }
      }
      while (i < mid) buffer[k++] = ys[i++];
      while (j < hi) buffer[k++] = ys[j++];
    }
    ys.swap(buffer);
  }
  return inversions;
}

}  // namespace

ConcordanceCounts concordance_counts(const PairSeries& p) {
  const std::size_t n = p.size();
  if (n < 2) return {};
  std::vector<DegreePair> sorted = p.pairs;
  std::sort(sorted.begin(), sorted.end(),
            [](const DegreePair& a, const DegreePair& b) { return a.x != b.x ? a.x < b.x : a.y < b.y; });

  std::int64_t tied_x = 0;
  std::int64_t tied_xy = 0;
  for (std::size_t lo = 0; lo < n;) {
    std::size_t hi = lo + 1;
    while (hi < n && sorted[hi].x == sorted[lo].x) ++hi;
    tied_x += pairs_of(static_cast<std::int64_t>(hi - lo));
    for (std::size_t a = lo; a < hi;) {
      std::size_t b = a + 1;
      while (b < hi && sorted[b].y == sorted[a].y) ++b;
      tied_xy += pairs_of(static_cast<std::int64_t>(b - a));
      a = b;
    }
    lo = hi;
  }

  std::vector<Degree> ys(n);
  std::transform(sorted.begin(), sorted.end(), ys.begin(), [](const DegreePair& q) { return q.y; });
  const std::int64_t discordant = count_inversions(ys);  // ys now sorted

  std::int64_t tied_y = 0;
  for (std::size_t lo = 0; lo < n;) {
    std::size_t hi = lo + 1;
    while (hi < n && ys[hi] == ys[lo]) ++hi;
    tied_y += pairs_of(static_cast<std::int64_t>(hi - lo));
    lo = hi;
  }

  const std::int64_t total = pairs_of(static_cast<std::int64_t>(n));
  return {total - tied_x - tied_y + tied_xy - discordant, discordant};
}

double kendall_tau(const PairSeries& p) {
  require_rank_size(p.size());
  const ConcordanceCounts c = concordance_counts(p);
  const auto m = static_cast<long double>(p.size());
  return clamp_unit(2.0L * static_cast<long double>(c.concordant - c.discordant) / (m * (m - 1.0L)));
}

MeasureValue kendall_tau(const DirectedGraph& g, DependencyType t) {
  return {kendall_tau(edge_degree_pairs(g, t)), MeasureKind::kendall, t};
}

// ---------------------------------------------------------------------------

MeasureValue compute_measure(const DirectedGraph& g, const DegreeTable& d, DependencyType t, MeasureKind m,
                             std::uint64_t seed, std::size_t rho_reps) {
  if (m == MeasureKind::pearson) return pearson(g, d, t);
  const PairSeries p = edge_degree_pairs(g, d, t);
  switch (m) {
    case MeasureKind::spearman_uniform: {
      if (rho_reps == 0) throw Error(ErrorCode::invalid_argument, "rho_reps must be positive");
      long double sum = 0.0L;
      for (std::size_t r = 0; r < rho_reps; ++r) sum += spearman_uniform(p, derive_seed(seed, r));
      return {static_cast<double>(sum / static_cast<long double>(rho_reps)), m, t};
    }
    case MeasureKind::spearman_average: return {spearman_average(p), m, t};
    case MeasureKind::kendall: return {kendall_tau(p), m, t};
    case MeasureKind::pearson: break;
  }
  return pearson(g, d, t);
}

}  // namespace degcorr
