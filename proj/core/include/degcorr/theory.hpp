#pragma once

// Closed forms and asymptotic constants for the bridge-graph families, the
// exponent bookkeeping behind the vanishing of Pearson's coefficient under
// heavy tails, and an empirical scaling study of degree-moment sums.
//
// Bridge-family closed forms take n >= 1 and integer a >= 1 and describe
// G(n, a n) and its disconnected variant. For n >= 2 the degree classes
// {sources, hub fan-out, bridge} have pairwise distinct degrees and the
// formulas are polynomial in (n, a); n = 1 merges classes and is handled by
// separate branches.

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "degcorr/generators.hpp"
#include "degcorr/graph.hpp"

namespace degcorr {

struct GammaPair {
  double gamma_out;  // tail index of out-degrees
  double gamma_in;   // tail index of in-degrees
};

/// Growth exponents of the four sums a_n, b_n, c_n, d_n:
///   a_n = (sum D^+ D^alpha)^2 / |E|,  b_n = (sum D^- D^beta)^2 / |E|,
///   c_n = sum D^+ (D^alpha)^2,        d_n = sum D^- (D^beta)^2.
struct LimitExponents {
  double a;
  double b;
  double c;
  double d;
};

/// max(p / gamma_out, q / gamma_in, 1): growth exponent of sum_v out^p in^q.
double scaling_exponent(double p, double q, GammaPair g);

LimitExponents limit_exponents(DependencyType t, GammaPair g);

/// (a < c and b <= d) or (a <= c and b < d): the correction term of Pearson vanishes.
bool exponents_force_vanishing(const LimitExponents& e);

/// Membership of (gamma_out, gamma_in) in the open region where the Pearson
/// correction term vanishes for type t.
bool region_contains(DependencyType t, GammaPair g);

enum class BridgeVariant : std::uint8_t { connected, disconnected };
enum class TieOrdering : std::uint8_t { by_index, by_reverse_index };

/// In/Out Pearson of G(n, a n).
double closed_form_pearson_bridge(std::int64_t n, std::int64_t a);
/// In/Out Pearson of the disconnected bridge graph, from its exact moment sums.
double closed_form_pearson_disconnected_bridge(std::int64_t n, std::int64_t a);

/// In/Out average-rank Spearman of G(n, a n) or its disconnected variant.
double closed_form_spearman_bridge(std::int64_t n, std::int64_t a, BridgeVariant variant);

/// In/Out Spearman of G(n, a n) with deterministic tie orders: by_index on
/// both sides, or by_index on sources and by_reverse_index on targets.
double closed_form_spearman_ranked(std::int64_t n, std::int64_t a, TieOrdering ordering);

/// sigmabar_- * sigmabar_+ of G(n, a n) for n >= 2, with sigmabar^2 = sum (2 Rbar - |E| - 1)^2
/// (the doubled-rank scale of AverageRankSums): (a^2+a)n^3 + (a+1)^2 n^2 + (a+1)n.
double sigma_bar_product_bridge(std::int64_t n, std::int64_t a);

struct ConcordanceClosedForm {
  std::int64_t concordant;
  std::int64_t discordant;
  std::int64_t edges;
};

/// In/Out concordant/discordant counts of G(n, a n) or the disconnected variant.
ConcordanceClosedForm bridge_concordance(std::int64_t n, std::int64_t a, BridgeVariant variant);

/// In/Out Kendall tau of G(n, a n): (2(a+1)n - 2an^2) / ((a+1)^2 n^2 + (a+1)n) for n >= 2.
double closed_form_tau_bridge(std::int64_t n, std::int64_t a);
double closed_form_tau_disconnected_bridge(std::int64_t n, std::int64_t a);

/// Large-n limit of E[uniform-tie In/Out Spearman] on G(n, a n): -3a / (a+1)^2.
double rho_expectation_limit(double a);
/// Large-n limit of the In/Out Kendall tau on G(n, a n): -2a / (a+1)^2.
double tau_limit(double a);
/// Large-n limit of closed_form_spearman_ranked(by_index): (a^3-3a^2-3a+1)/(a+1)^3.
double ranked_spearman_limit(double a);

/// f(x) = (1 + a x) / (sqrt(1 + x) sqrt(1 + a^2 x)); support bound of the
/// random Pearson limit of the random bridge collection.
double support_function_f(double x, double a);
/// Location of the minimum of f(., a): 1 / a.
double argmin_support_function(double a);

/// Golden-section search for a minimum of a unimodal function on [lo, hi].
double golden_section_minimize(const std::function<double(double)>& f, double lo, double hi, double tol);

struct EpsilonTuning {
  double epsilon;
  /// Root a > 1 of f(1/a, a) = epsilon found by bisection.
  double a_numeric;
  /// The two closed-form candidates (2 - e^2 +- sqrt(1 - e)) / e^2, checked against the numeric root.
  double candidate_plus;
  double candidate_minus;
  bool candidate_plus_matches;
  bool candidate_minus_matches;
  /// (2 - e^2 + 2 sqrt(1 - e^2)) / e^2, the root obtained by solving 2 sqrt(a) / (1 + a) = e.
  double solved_closed_form;
};

/// Chooses a > 1 so that min_x f(x, a) = epsilon, for epsilon in (0, 1).
EpsilonTuning tune_support_minimum(double epsilon);

// ---------------------------------------------------------------------------
// Scaling study

enum class StudyFamily : std::uint8_t {
  /// Raw i.i.d. (out, in) degree sequences.
  iid_degrees,
  /// Balanced sequences pushed through the erased configuration model.
  iid_configuration_model,
};

struct ScalingStudyConfig {
  StudyFamily family = StudyFamily::iid_degrees;
  PowerLawSpec spec_out{2.5, 1};
  PowerLawSpec spec_in{2.5, 1};
  std::vector<std::size_t> sizes;
  std::size_t repetitions = 20;
  std::uint64_t seed = 0;
  std::vector<std::pair<double, double>> moments{{1.0, 0.0}};
  std::size_t max_balance_attempts = 1'000'000;
};

struct ScalingPoint {
  std::size_t n;
  /// Median over repetitions of sum_v out^p in^q.
  double median_sum;
};

struct ScalingSeries {
  double p;
  double q;
  std::vector<ScalingPoint> points;
  double predicted_exponent;
  double fitted_slope;
};

/// For every (p, q): median of sum_v out^p in^q over repetitions at each size,
/// then the least-squares slope of log(median) on log(n).
std::vector<ScalingSeries> scaling_study(const ScalingStudyConfig& config);

}  // namespace degcorr
