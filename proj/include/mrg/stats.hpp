#pragma once

#include <cstdint>
#include <span>

namespace mrg::stats {

struct Interval {
  double lower = 0.0;
  double upper = 0.0;
};

/// Wilson score interval for `successes` out of `trials` at normal quantile z.
Interval wilson(std::int64_t successes, std::int64_t trials, double z = 1.959963984540054);

double mean(std::span<const double> xs);
/// Unbiased sample variance; 0 for fewer than two samples.
double variance(std::span<const double> xs);
double median(std::span<const double> xs);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(std::span<const double> xs, std::span<const double> ys);

}  // namespace mrg::stats
