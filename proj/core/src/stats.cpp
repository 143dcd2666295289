#include "degcorr/stats.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "degcorr/error.hpp"

namespace degcorr {

double mean(std::span<const double> xs) {
  if (xs.empty()) throw Error(ErrorCode::invalid_argument, "mean of empty sample");
  long double s = 0.0L;
  for (double x : xs) s += x;
  return static_cast<double>(s / static_cast<long double>(xs.size()));
}

double sample_stddev(std::span<const double> xs) {
  if (xs.size() < 2) return 0.0;
  const long double m = mean(xs);
  long double ss = 0.0L;
  for (double x : xs) ss += (x - m) * (x - m);
  return static_cast<double>(std::sqrt(ss / static_cast<long double>(xs.size() - 1)));
}

MeanEstimate mean_estimate(std::span<const double> xs) {
  return {mean(xs), sample_stddev(xs) / std::sqrt(static_cast<double>(xs.size()))};
}

double median(std::span<const double> xs) {
  if (xs.empty()) throw Error(ErrorCode::invalid_argument, "median of empty sample");
  std::vector<double> v(xs.begin(), xs.end());
  std::sort(v.begin(), v.end());
  const std::size_t h = v.size() / 2;
  return v.size() % 2 == 1 ? v[h] : 0.5 * (v[h - 1] + v[h]);
}

double least_squares_slope(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw Error(ErrorCode::invalid_argument, "slope needs at least two paired points");
  }
  const long double mx = mean(xs);
  const long double my = mean(ys);
  long double sxy = 0.0L;
  long double sxx = 0.0L;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  if (sxx == 0.0L) throw Error(ErrorCode::invalid_argument, "slope undefined for constant xs");
  return static_cast<double>(sxy / sxx);
}

}  // namespace degcorr
