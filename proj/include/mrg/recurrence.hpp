#pragma once

#include <cstdint>
#include <numbers>
#include <vector>

// The scalar recurrence x_{k+1} = f_a(x_k), f_a(x) = x(1 - a x), and its bounds.
namespace mrg::recurrence {

inline constexpr double kEulerGamma = std::numbers::egamma_v<double>;

struct RecurrenceParams {
  double x1 = 0.5;  // in (0,1)
  double a = 1.0;   // in (0,1]
  std::int64_t n = 1;

  void validate() const;
};

struct TermBounds {
  double lower = 0.0;
  double upper = 0.0;
  double threshold_n_star = 0.0;  // (1/f_1(a*x1) - 1)^2
};

struct HarmonicEstimate {
  double value = 0.0;
  double lower = 0.0;
  double upper = 0.0;
};

struct Interval {
  double lower = 0.0;
  double upper = 0.0;
};

constexpr double step(double x, double a) noexcept { return x * (1.0 - a * x); }

/// Vertex and maximum of f_a: 1/(2a) and 1/(4a).
constexpr double vertex(double a) noexcept { return 1.0 / (2.0 * a); }
constexpr double maximum(double a) noexcept { return 1.0 / (4.0 * a); }

/// x_1..x_n.
std::vector<double> generate(const RecurrenceParams& params);

/// (1/f_1(y) - 1)^2, the regime switch of the lower bound.
double threshold(double y);

/// l_n(y): 1/(sqrt(n)+1)^2 when n >= threshold(y), else f_1(y)/n.
double ell(std::int64_t n, double y);

/// 2(1 - f_1(y)) log f_1(y) - (5/2 + log 2) f_1(y).
double eta(double y);

/// Bounds on x_n for n >= 2 (lower uses the normalised start a*x1).
TermBounds term_bounds(std::int64_t n, const RecurrenceParams& params);

/// Bounds on x_1 + ... + x_n; requires n >= ceil(threshold(a*x1)).
Interval partial_sum_bounds(std::int64_t n, const RecurrenceParams& params);

HarmonicEstimate harmonic(std::int64_t n);

}  // namespace mrg::recurrence
