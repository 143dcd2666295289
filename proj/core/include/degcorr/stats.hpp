#pragma once

#include <span>

namespace degcorr {

struct MeanEstimate {
  double mean = 0.0;
  /// Standard error of the mean (sample sigma / sqrt(n)).
  double standard_error = 0.0;
};

double mean(std::span<const double> xs);
/// Sample standard deviation (n - 1 denominator); 0 for fewer than 2 values.
double sample_stddev(std::span<const double> xs);
MeanEstimate mean_estimate(std::span<const double> xs);
double median(std::span<const double> xs);

/// Ordinary least-squares slope of ys on xs.
double least_squares_slope(std::span<const double> xs, std::span<const double> ys);

}  // namespace degcorr
