#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Closed-form evaluators for the asymptotic bounds on G(n, p, r), the first-moment
// function f_r and its positive root, and the prime-counting function.
// Throughout, gamma = 1 - r.
namespace mrg::theory {

enum class BoundKind { lower, upper, target };

struct BoundReport {
  std::string name;
  double value = 0.0;
  std::string validity;  // when the value applies
  BoundKind kind = BoundKind::lower;
};

const char* to_string(BoundKind kind) noexcept;

/// f_r(c) = c(1 - log c) + (r/gamma)(c + log(1-c)) for c, r in (0,1).
double f_r_eval(double c, double r);
/// -log c - (r/gamma) c/(1-c)
double f_r_derivative(double c, double r);
/// -1/c - (r/gamma)/(1-c)^2
double f_r_second_derivative(double c, double r);

/// f_r written in t = -log(1-c), which keeps roots near c = 1 representable.
double f_r_eval_t(double t, double r);

struct RootResult {
  double c_star = 0.0;
  double log_one_minus_c = 0.0;  // log(1 - c_star); exact even when c_star rounds to 1
  double residual = 0.0;         // |f_r(c_star)|
  std::int64_t iterations = 0;
  double margin = 0.0;           // e^{-r} + r/10 - c_star
  bool converged = false;        // residual <= tol
};

/// Positive root of f_r by bisection. The positive end of the bracket is found by the scan
/// c = 2^{-k}; the search variable is t = -log(1-c).
RootResult upper_root(double r, double tol = 1e-12);

/// e^{-r} + r/10.
double upper_constant(double r);

/// (e^{-r} + r/10) n, plus (c* + eps) n when r < 1.
std::vector<BoundReport> alpha_upper(double n, double r, double eps = 0.0);

/// gamma/(2+eps) n/log n, gamma/(2(2 eps+1)) pi(n) and gamma/((2+eps)(1+eps)) pi(n).
std::vector<BoundReport> alpha_lower(double n, double r, double eps);

/// Number of primes <= n (sieve of Eratosthenes).
std::int64_t prime_count(std::int64_t n);

/// Minimum-degree upper value (2/gamma + eps) log n, maximum-degree lower value
/// (2/gamma - eps) log n, and the average-degree target (2/gamma) log n.
std::vector<BoundReport> degree_bounds(double n, double r, double eps);

/// chi >= n^2/(n^2 - 2m), chi >= 1/(1 - (2/gamma - eps)/pi(n)), chi' >= (2/gamma - eps) log n.
std::vector<BoundReport> chromatic_bounds(std::int64_t n, std::int64_t m, double r, double eps);

/// gamma/(gamma+1) and 1/(ceil(1/gamma) + 1).
double greedy_exponent(double r);
double greedy_exponent_ceiling(double r);

/// n^{gamma/(gamma+1)} and n^{1/(ceil(1/gamma)+1)}.
std::vector<BoundReport> greedy_bound(double n, double r);

/// Ratio bounds: in-order greedy O(n^{1/(1+gamma)}) (order only), minimum-degree greedy
/// 1 + (1/gamma + eps) log n.
std::vector<BoundReport> performance_ratio_bounds(double n, double r, double eps);

/// (d + 2)/2 for average degree d.
double min_degree_ratio_bound(double avg_degree);

}  // namespace mrg::theory
