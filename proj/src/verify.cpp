#include "mrg/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>

#include "mrg/bernoulli.hpp"
#include "mrg/graphgen.hpp"
#include "mrg/recurrence.hpp"
#include "mrg/rng.hpp"

namespace mrg::verify {

using experiment::format_real;

Check recurrence_sandwich(std::int64_t max_n) {
  std::int64_t violations = 0;
  std::int64_t checked = 0;
  for (double x1 : {0.01, 0.1, 0.3, 0.5, 0.7, 0.9, 0.99}) {
    for (double a : {0.05, 0.25, 0.5, 0.75, 1.0}) {
      const recurrence::RecurrenceParams params{x1, a, max_n};
      const auto xs = recurrence::generate(params);
      const auto n_star = static_cast<std::int64_t>(std::ceil(recurrence::threshold(a * x1)));
      double sum = xs[0];
      for (std::int64_t n = 2; n <= max_n; ++n) {
        const double xn = xs[static_cast<std::size_t>(n - 1)];
        sum += xn;
        const auto tb = recurrence::term_bounds(n, params);
        violations += !(tb.lower <= xn && xn <= tb.upper);
        ++checked;
        if (n >= n_star) {
          const auto sb = recurrence::partial_sum_bounds(n, params);
          violations += !(sb.lower <= sum && sum <= sb.upper);
          ++checked;
        }
      }
    }
  }
  return {"recurrence term and partial-sum bounds", violations == 0,
          std::to_string(violations) + " violations in " + std::to_string(checked) + " comparisons"};
}

Check independence_upper_dominance(std::int64_t n, std::int64_t k, double p, double r, std::int64_t subsets,
                                   std::uint64_t seed) {
  const double upper = independence_prob_upper(n, k, p, r);
  const EdgeProbTable table(n - 1, p, r);
  SplitMix64 rng(seed);
  std::vector<Vertex> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), Vertex{0});
  std::int64_t violations = 0;
  double worst = 0.0;
  for (std::int64_t s = 0; s < subsets; ++s) {
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<Vertex> subset(all.begin(), all.begin() + k);
    std::sort(subset.begin(), subset.end());
    const double exact = exact_subset_independence(table, r, subset);
    worst = std::max(worst, exact);
    violations += exact > upper;
  }
  return {"independence upper bound dominates exact subsets", violations == 0,
          "bound " + format_real(upper) + ", largest exact " + format_real(worst) + ", " +
              std::to_string(violations) + " violations"};
}

Check second_moment_bound(std::int64_t max_n) {
  std::int64_t violations = 0;
  std::string first;
  for (double beta : {0.25, 0.5, 0.75, 0.9, 1.0}) {
    for (double p1 : {0.1, 0.5, 0.9}) {
      const bernoulli::ChainParams params{p1, beta, max_n, 0};
      const auto second = bernoulli::exact_second_moment_prefix(params);
      double mean = 0.0;
      double pk = p1;
      for (std::int64_t n = 1; n <= max_n; ++n) {
        mean += pk;
        pk = recurrence::step(pk, beta);
        if (n < 2) continue;
        const double s2 = second[static_cast<std::size_t>(n - 1)];
        const double lnb = std::log(static_cast<double>(n)) / beta;
        const double bound = 2.0 * (1.0 - beta) / beta * mean + lnb * lnb;
        if (!(mean * mean <= s2 * (1.0 + 1e-12) && s2 <= bound)) {
          if (violations++ == 0) {
            char buf[96];
            std::snprintf(buf, sizeof buf, " (first: beta=%g p1=%g n=%lld)", beta, p1, static_cast<long long>(n));
            first = buf;
          }
        }
      }
    }
  }
  return {"second moment between squared mean and moment bound", violations == 0,
          std::to_string(violations) + " violations" + first};
}

Check harmonic_sandwich(std::int64_t max_n) {
  std::int64_t violations = 0;
  for (std::int64_t n = 1; n <= max_n; n = n < 100 ? n + 1 : n * 11 / 10) {
    const auto h = recurrence::harmonic(n);
    violations += !(h.lower <= h.value && h.value <= h.upper);
  }
  return {"harmonic number sandwich", violations == 0, std::to_string(violations) + " violations"};
}

std::vector<Check> builtin() {
  return {recurrence_sandwich(), harmonic_sandwich(), independence_upper_dominance(), second_moment_bound()};
}

}  // namespace mrg::verify
