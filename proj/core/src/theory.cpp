#include "degcorr/theory.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "degcorr/config_model.hpp"
#include "degcorr/error.hpp"
#include "degcorr/exact.hpp"
#include "degcorr/rng.hpp"
#include "degcorr/stats.hpp"

namespace degcorr {

double scaling_exponent(double p, double q, GammaPair g) {
  return std::max({p / g.gamma_out, q / g.gamma_in, 1.0});
}

LimitExponents limit_exponents(DependencyType t, GammaPair g) {
  // (p, q) of sum_v out^p in^q for D^+ D^alpha, D^- D^beta and their squared-degree variants.
  const bool alpha_out = t.source_kind == DegreeKind::out;
  const bool beta_out = t.target_kind == DegreeKind::out;
  const double first_source = alpha_out ? scaling_exponent(2, 0, g) : scaling_exponent(1, 1, g);
  const double first_target = beta_out ? scaling_exponent(1, 1, g) : scaling_exponent(0, 2, g);
  const double second_source = alpha_out ? scaling_exponent(3, 0, g) : scaling_exponent(1, 2, g);
  const double second_target = beta_out ? scaling_exponent(2, 1, g) : scaling_exponent(0, 3, g);
  // |E| grows linearly, so a_n = (sum)^2 / |E| grows with exponent 2e - 1.
  return {2.0 * first_source - 1.0, 2.0 * first_target - 1.0, second_source, second_target};
}

bool exponents_force_vanishing(const LimitExponents& e) {
  return (e.a < e.c && e.b <= e.d) || (e.a <= e.c && e.b < e.d);
}

bool region_contains(DependencyType t, GammaPair g) {
  const double x = g.gamma_out;
  const double y = g.gamma_in;
  if (t == kInOut) return (1 < x && x < 2 && y > 1) || (1 < y && y < 2 && x > 1);
  if (t == kOutIn) return (1 < x && x < 3 && y > 1) || (1 < y && y < 3 && x > 1);
  if (t == kOutOut) return 1 < x && x < 3 && y > 1;
  return 1 < y && y < 3 && x > 1;  // In/In
}

namespace {

void check_bridge_args(std::int64_t n, std::int64_t a) {
  if (n < 1 || a < 1) throw Error(ErrorCode::invalid_argument, "bridge closed forms need n >= 1 and a >= 1");
}

double ratio(Int128 num, Int128 den) { return static_cast<double>(to_long_double(num) / to_long_double(den)); }

double ratio_sqrt(Int128 num, Int128 rad1, Int128 rad2) {
  return static_cast<double>(to_long_double(num) /
                             (std::sqrt(to_long_double(rad1)) * std::sqrt(to_long_double(rad2))));
}

}  // namespace

double closed_form_pearson_bridge(std::int64_t n_, std::int64_t a_) {
  check_bridge_args(n_, a_);
  const Int128 n = n_;
  const Int128 a = a_;
  const Int128 num = a * (1 + a) * n * n * n - (a * a + a + 1) * n * n;
  const Int128 source = (1 + a) * n * n * n - (n - 1) * a * n;
  const Int128 target = a * a * (1 + a) * n * n * n - a * n * n + n;
  return ratio_sqrt(num, source, target);
}

double closed_form_pearson_disconnected_bridge(std::int64_t n_, std::int64_t a_) {
  check_bridge_args(n_, a_);
  const Int128 n = n_;
  const Int128 a = a_;
  const Int128 edges = (1 + a) * n + 2;
  const Int128 cross = (a + 1) * n;
  const Int128 first = (1 + a) * n + 1;  // sum D^- D^+, same on both sides
  const Int128 source_second = n * n + a * n + 1;
  const Int128 target_second = n + a * a * n * n + 1;
  return ratio_sqrt(edges * cross - first * first, edges * source_second - first * first,
                    edges * target_second - first * first);
}

double closed_form_spearman_bridge(std::int64_t n_, std::int64_t a_, BridgeVariant variant) {
  check_bridge_args(n_, a_);
  const Int128 n = n_;
  const Int128 a = a_;
  if (variant == BridgeVariant::connected) {
    if (n == 1) {
      // The bridge's source ties with the hub fan-out; for a = 1 the bridge's
      // target also ties with the sources' target.
      if (a == 1) return -0.5;
      return ratio_sqrt(-(a + 2) * (a - 1), (a + 2) * (a + 1), 2 * (a + 1) * (a + 1));
    }
    const Int128 tail = (a + 1) * (a + 1) * n * n + (a + 1) * n;
    const Int128 lead = (a * a + a) * n * n * n;
    return ratio(-lead + tail, lead + tail);
  }
  if (n == 1) {
    if (a == 1) return -1.0 / 3.0;
    return ratio_sqrt(-(a + 3) * (a - 1), (a + 3) * (a + 2), 3 * (a + 1) * (a + 2));
  }
  const Int128 num = -(n - 1) * (a * n - 1) * (a * n + n + 2);
  const Int128 source = (a * a + a) * n * n * n + (a * a + 4 * a + 2) * n * n + (3 * a + 4) * n + 2;
  const Int128 target = (a * a + a) * n * n * n + (2 * a * a + 4 * a + 1) * n * n + (4 * a + 3) * n + 2;
  return ratio_sqrt(num, source, target);
}

double closed_form_spearman_ranked(std::int64_t n_, std::int64_t a_, TieOrdering ordering) {
  check_bridge_args(n_, a_);
  const Int128 n = n_;
  const Int128 a = a_;
  if (n == 1) {
    if (a == 1) return ordering == TieOrdering::by_index ? -1.0 : -0.5;
    // Source ranks: hub fan-out f_j -> j, bridge -> a+1, source edge -> a+2.
    // Target ranks: bridge -> 1, source edge -> 2, f_j -> 2+j or a+3-j.
    const Int128 e = a + 2;
    const Int128 squares = a * (a + 1) * (2 * a + 1) / 6;
    const Int128 fixed = 2 * (a + 2) + (a + 1);
    const Int128 s = ordering == TieOrdering::by_index ? fixed + squares + a * (a + 1)
                                                       : fixed + (a + 3) * a * (a + 1) / 2 - squares;
    return ratio(12 * s - 3 * e * (e + 1) * (e + 1), e * e * e - e);
  }
  const Int128 c = a + 1;
  const Int128 den = c * c * c * n * n * n + 3 * c * c * n * n + 2 * c * n;
  if (ordering == TieOrdering::by_index) {
    return ratio((a * a * a - 3 * a * a - 3 * a + 1) * n * n * n + 3 * c * c * n * n + 2 * c * n, den);
  }
  return ratio(-c * c * c * n * n * n + 3 * c * c * n * n + 4 * c * n, den);
}

double sigma_bar_product_bridge(std::int64_t n_, std::int64_t a_) {
  check_bridge_args(n_, a_);
  const Int128 n = n_;
  const Int128 a = a_;
  return static_cast<double>(to_long_double((a * a + a) * n * n * n + (a + 1) * (a + 1) * n * n + (a + 1) * n));
}

ConcordanceClosedForm bridge_concordance(std::int64_t n, std::int64_t a, BridgeVariant variant) {
  check_bridge_args(n, a);
  const std::int64_t extra = variant == BridgeVariant::disconnected ? 1 : 0;
  const std::int64_t edges = (a + 1) * n + 1 + extra;
  if (n == 1) {
    // Source edge vs bridge is concordant only when the bridge target out-degree exceeds 1.
    return {a >= 2 ? 1 : 0, a, edges};
  }
  // Sources vs fan-out are discordant; both against the bridge(s) concordant.
  // In the disconnected graph the two half-bridges are discordant with each other.
  return {(a + 1) * n, a * n * n + extra, edges};
}

namespace {

double tau_from(const ConcordanceClosedForm& c) {
  const auto m = static_cast<long double>(c.edges);
  return static_cast<double>(2.0L * static_cast<long double>(c.concordant - c.discordant) / (m * (m - 1.0L)));
}

}  // namespace

double closed_form_tau_bridge(std::int64_t n, std::int64_t a) {
  return tau_from(bridge_concordance(n, a, BridgeVariant::connected));
}

double closed_form_tau_disconnected_bridge(std::int64_t n, std::int64_t a) {
  return tau_from(bridge_concordance(n, a, BridgeVariant::disconnected));
}

double rho_expectation_limit(double a) {
  if (!(a > 0.0)) throw Error(ErrorCode::invalid_argument, "a must be positive");
  return -3.0 * a / ((a + 1.0) * (a + 1.0));
}

double tau_limit(double a) {
  if (!(a > 0.0)) throw Error(ErrorCode::invalid_argument, "a must be positive");
  return -2.0 * a / ((a + 1.0) * (a + 1.0));
}

double ranked_spearman_limit(double a) {
  const double c = a + 1.0;
  return (a * a * a - 3.0 * a * a - 3.0 * a + 1.0) / (c * c * c);
}

double support_function_f(double x, double a) {
  if (!(x > 0.0) || !(a > 0.0)) throw Error(ErrorCode::invalid_argument, "f needs x > 0 and a > 0");
  return (1.0 + a * x) / (std::sqrt(1.0 + x) * std::sqrt(1.0 + a * a * x));
}

double argmin_support_function(double a) {
  if (!(a > 0.0)) throw Error(ErrorCode::invalid_argument, "a must be positive");
  return 1.0 / a;
}

double golden_section_minimize(const std::function<double(double)>& f, double lo, double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > tol) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    }
  }
  return 0.5 * (lo + hi);
}

EpsilonTuning tune_support_minimum(double epsilon) {
  if (!(epsilon > 0.0) || !(epsilon < 1.0)) {
    throw Error(ErrorCode::invalid_argument, "epsilon must lie in (0, 1)");
  }
  auto gap = [epsilon](double a) { return support_function_f(1.0 / a, a) - epsilon; };
  double lo = 1.0;
  double hi = 2.0;
  while (gap(hi) > 0.0) hi *= 2.0;
  while ((hi - lo) > 1e-10 * std::max(1.0, lo)) {
    const double mid = 0.5 * (lo + hi);
    (gap(mid) > 0.0 ? lo : hi) = mid;
  }
  EpsilonTuning r{};
  r.epsilon = epsilon;
  r.a_numeric = 0.5 * (lo + hi);
  const double e2 = epsilon * epsilon;
  r.candidate_plus = (2.0 - e2 + std::sqrt(1.0 - epsilon)) / e2;
  r.candidate_minus = (2.0 - e2 - std::sqrt(1.0 - epsilon)) / e2;
  const double tol = 1e-6 * std::max(1.0, r.a_numeric);
  r.candidate_plus_matches = std::abs(r.candidate_plus - r.a_numeric) <= tol;
  r.candidate_minus_matches = std::abs(r.candidate_minus - r.a_numeric) <= tol;
  r.solved_closed_form = (2.0 - e2 + 2.0 * std::sqrt(1.0 - e2)) / e2;
  return r;
}

// ---------------------------------------------------------------------------

namespace {

double moment_sum(std::span<const NodeDegrees> degrees, double p, double q) {
  long double s = 0.0L;
  for (const NodeDegrees& nd : degrees) {
    s += std::pow(static_cast<long double>(nd.out), static_cast<long double>(p)) *
         std::pow(static_cast<long double>(nd.in), static_cast<long double>(q));
  }
  return static_cast<double>(s);
}

std::vector<NodeDegrees> study_sample(const ScalingStudyConfig& c, std::size_t n, std::uint64_t seed) {
  if (c.family == StudyFamily::iid_degrees) return iid_degree_sequence(n, c.spec_out, c.spec_in, seed);
  const IidConfigModelGraph g = iid_configuration_graph(n, c.spec_out, c.spec_in, seed, c.max_balance_attempts);
  return node_degrees(degrees(g.draw.graph));
}

}  // namespace

std::vector<ScalingSeries> scaling_study(const ScalingStudyConfig& config) {
  if (config.sizes.size() < 3) throw Error(ErrorCode::invalid_argument, "scaling study needs at least 3 sizes");
  if (config.repetitions < 1) throw Error(ErrorCode::invalid_argument, "scaling study needs repetitions >= 1");
  if (config.moments.empty()) throw Error(ErrorCode::invalid_argument, "scaling study needs at least one (p, q)");
  const GammaPair gammas{config.spec_out.gamma, config.spec_in.gamma};

  // sums[moment][size][rep]
  std::vector<std::vector<std::vector<double>>> sums(
      config.moments.size(), std::vector<std::vector<double>>(config.sizes.size()));
  for (std::size_t si = 0; si < config.sizes.size(); ++si) {
    const std::uint64_t size_seed = derive_seed(config.seed, si);
    for (std::size_t r = 0; r < config.repetitions; ++r) {
      const std::vector<NodeDegrees> sample = study_sample(config, config.sizes[si], derive_seed(size_seed, r));
      for (std::size_t mi = 0; mi < config.moments.size(); ++mi) {
        sums[mi][si].push_back(moment_sum(sample, config.moments[mi].first, config.moments[mi].second));
      }
    }
  }

  std::vector<ScalingSeries> out;
  for (std::size_t mi = 0; mi < config.moments.size(); ++mi) {
    const auto [p, q] = config.moments[mi];
    ScalingSeries series{p, q, {}, scaling_exponent(p, q, gammas), 0.0};
    std::vector<double> log_n;
    std::vector<double> log_sum;
    for (std::size_t si = 0; si < config.sizes.size(); ++si) {
      const double med = median(sums[mi][si]);
      series.points.push_back({config.sizes[si], med});
      log_n.push_back(std::log(static_cast<double>(config.sizes[si])));
      log_sum.push_back(std::log(med));
    }
    series.fitted_slope = least_squares_slope(log_n, log_sum);
    out.push_back(std::move(series));
  }
  return out;
}

}  // namespace degcorr
