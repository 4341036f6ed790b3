#include "mrg/theory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mrg::theory {

namespace {

double ratio(double r) {
  if (!(r > 0.0 && r < 1.0)) throw std::domain_error("f_r: r must lie in (0,1)");
  return r / (1.0 - r);
}

void check_c(double c) {
  if (!(c > 0.0 && c < 1.0)) throw std::domain_error("f_r: c must lie in (0,1)");
}

double gamma_of(double r, const char* who) {
  if (!(r >= 0.0 && r < 1.0))
    throw std::domain_error(std::string(who) + ": r must lie in [0,1) (gamma = 1 - r > 0)");
  return 1.0 - r;
}

}  // namespace

const char* to_string(BoundKind kind) noexcept {
  switch (kind) {
    case BoundKind::lower: return "lower";
    case BoundKind::upper: return "upper";
    case BoundKind::target: return "target";
  }
  return "?";
}

double f_r_eval(double c, double r) {
  check_c(c);
  return c * (1.0 - std::log(c)) + ratio(r) * (c + std::log1p(-c));
}

double f_r_derivative(double c, double r) {
  check_c(c);
  return -std::log(c) - ratio(r) * c / (1.0 - c);
}

double f_r_second_derivative(double c, double r) {
  check_c(c);
  return -1.0 / c - ratio(r) / ((1.0 - c) * (1.0 - c));
}

double f_r_eval_t(double t, double r) {
  if (!(t > 0.0) || !std::isfinite(t)) throw std::domain_error("f_r: t must be positive and finite");
  const double c = -std::expm1(-t);
  return c * (1.0 - std::log(c)) + ratio(r) * (c - t);
}

RootResult upper_root(double r, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("upper_root: tol must be positive");
  ratio(r);

  double lo = 0.0;
  for (int k = 1; k <= 1000; ++k) {
    const double t = -std::log1p(-std::ldexp(1.0, -k));
    if (f_r_eval_t(t, r) > 0.0) {
      lo = t;
      break;
    }
  }
  double hi = 0.0;
  for (double t = 1.0; t < 1e300; t *= 2.0) {
    if (f_r_eval_t(t, r) < 0.0) {
      hi = t;
      break;
    }
  }
  if (lo == 0.0 || hi == 0.0 || !(lo < hi)) throw std::runtime_error("upper_root: bracketing failed");

  RootResult res;
  double f_lo = f_r_eval_t(lo, r);
  double f_hi = f_r_eval_t(hi, r);
  for (;;) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    ++res.iterations;
    const double f_mid = f_r_eval_t(mid, r);
    if (f_mid == 0.0) {
      lo = hi = mid;
      f_lo = f_hi = 0.0;
      break;
    }
    if (f_mid > 0.0) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
      f_hi = f_mid;
    }
  }
  const double t = std::abs(f_lo) <= std::abs(f_hi) ? lo : hi;
  res.c_star = -std::expm1(-t);
  res.log_one_minus_c = -t;
  res.residual = std::min(std::abs(f_lo), std::abs(f_hi));
  res.margin = upper_constant(r) - res.c_star;
  res.converged = res.residual <= tol;
  return res;
}

double upper_constant(double r) { return std::exp(-r) + 0.1 * r; }

std::vector<BoundReport> alpha_upper(double n, double r, double eps) {
  if (!(n >= 1.0)) throw std::invalid_argument("alpha_upper: n must be >= 1");
  if (!(r > 0.0 && r <= 1.0)) throw std::domain_error("alpha_upper: r must lie in (0,1]");
  std::vector<BoundReport> out;
  out.push_back({"alpha_upper", upper_constant(r) * n, "w.h.p. as n -> infinity", BoundKind::upper});
  if (r < 1.0) {
    const auto root = upper_root(r);
    out.push_back({"alpha_upper_root", (root.c_star + eps) * n,
                   "w.h.p. as n -> infinity, any eps > 0", BoundKind::upper});
  }
  return out;
}

std::vector<BoundReport> alpha_lower(double n, double r, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("alpha_lower: eps must be positive");
  if (!(n >= 2.0)) throw std::invalid_argument("alpha_lower: n must be >= 2");
  const double g = gamma_of(r, "alpha_lower");
  const auto pi = static_cast<double>(prime_count(static_cast<std::int64_t>(std::floor(n))));
  const std::string whp = "w.h.p. as n -> infinity";
  return {
      {"alpha_lower", g / (2.0 + eps) * n / std::log(n), whp, BoundKind::lower},
      {"alpha_lower_prime", g / (2.0 * (2.0 * eps + 1.0)) * pi, whp, BoundKind::lower},
      {"alpha_lower_prime_unsimplified", g / ((2.0 + eps) * (1.0 + eps)) * pi, whp, BoundKind::lower},
  };
}

std::int64_t prime_count(std::int64_t n) {
  if (n < 2) return 0;
  std::vector<char> composite(static_cast<std::size_t>(n) + 1, 0);
  std::int64_t count = 0;
  for (std::int64_t i = 2; i <= n; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    ++count;
    for (std::int64_t j = i * i; j <= n; j += i) composite[static_cast<std::size_t>(j)] = 1;
  }
  return count;
}

std::vector<BoundReport> degree_bounds(double n, double r, double eps) {
  if (!(n >= 2.0)) throw std::invalid_argument("degree_bounds: n must be >= 2");
  if (!(eps >= 0.0)) throw std::invalid_argument("degree_bounds: eps must be >= 0");
  const double c = 2.0 / gamma_of(r, "degree_bounds");
  const double logn = std::log(n);
  const std::string whp = "w.h.p. as n -> infinity";
  return {
      {"min_degree_upper", (c + eps) * logn, whp, BoundKind::upper},
      {"max_degree_lower", (c - eps) * logn, whp, BoundKind::lower},
      {"avg_degree_target", c * logn, "d/log n -> 2/gamma in probability", BoundKind::target},
  };
}

std::vector<BoundReport> chromatic_bounds(std::int64_t n, std::int64_t m, double r, double eps) {
  if (n < 2) throw std::invalid_argument("chromatic_bounds: n must be >= 2");
  const auto nd = static_cast<double>(n);
  if (m < 0 || 2.0 * static_cast<double>(m) >= nd * nd)
    throw std::invalid_argument("chromatic_bounds: need 0 <= m < n^2/2");
  const double c = 2.0 / gamma_of(r, "chromatic_bounds");
  const auto pi = static_cast<double>(prime_count(n));
  std::vector<BoundReport> out;
  out.push_back({"chromatic_turan", nd * nd / (nd * nd - 2.0 * static_cast<double>(m)), "every graph",
                 BoundKind::lower});
  const double shrink = (c - eps) / pi;
  if (shrink < 1.0)
    out.push_back({"chromatic_prime", 1.0 / (1.0 - shrink), "w.h.p., n >= 17", BoundKind::lower});
  out.push_back({"edge_chromatic", (c - eps) * std::log(nd), "w.h.p. as n -> infinity", BoundKind::lower});
  return out;
}

double greedy_exponent(double r) {
  const double g = gamma_of(r, "greedy_exponent");
  return g / (g + 1.0);
}

double greedy_exponent_ceiling(double r) {
  const double g = gamma_of(r, "greedy_exponent");
  return 1.0 / (std::ceil(1.0 / g) + 1.0);
}

std::vector<BoundReport> greedy_bound(double n, double r) {
  if (!(n >= 1.0)) throw std::invalid_argument("greedy_bound: n must be >= 1");
  const std::string whp = "w.h.p., order of growth only";
  return {
      {"greedy", std::pow(n, greedy_exponent(r)), whp, BoundKind::lower},
      {"greedy_ceiling", std::pow(n, greedy_exponent_ceiling(r)), whp, BoundKind::lower},
  };
}

std::vector<BoundReport> performance_ratio_bounds(double n, double r, double eps) {
  if (!(n >= 2.0)) throw std::invalid_argument("performance_ratio_bounds: n must be >= 2");
  const double g = gamma_of(r, "performance_ratio_bounds");
  return {
      {"ratio_in_order", std::pow(n, 1.0 / (1.0 + g)), "w.h.p., order of growth only", BoundKind::upper},
      {"ratio_min_degree", 1.0 + (1.0 / g + eps) * std::log(n), "w.h.p., any eps > 0", BoundKind::upper},
  };
}

double min_degree_ratio_bound(double avg_degree) {
  if (!(avg_degree >= 0.0)) throw std::invalid_argument("min_degree_ratio_bound: negative degree");
  return (avg_degree + 2.0) / 2.0;
}

}  // namespace mrg::theory
