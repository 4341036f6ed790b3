#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mrg/experiment.hpp"

// Fast deterministic self-checks behind `mrg verify`.
namespace mrg::verify {

using experiment::Check;

/// term_bounds and partial_sum_bounds against the exact recurrence on an (x1, a) grid.
Check recurrence_sandwich(std::int64_t max_n = 100'000);

/// independence_prob_upper dominates the exact probability of random k-subsets.
Check independence_upper_dominance(std::int64_t n = 40, std::int64_t k = 5, double p = 0.9, double r = 0.1,
                                   std::int64_t subsets = 100, std::uint64_t seed = 1);

/// E[S_n]^2 <= E[S_n^2] <= moment_bound for n in [2, max_n] on a (beta, p1) grid.
Check second_moment_bound(std::int64_t max_n = 2'000);

/// Harmonic sandwich for n up to max_n.
Check harmonic_sandwich(std::int64_t max_n = 100'000);

std::vector<Check> builtin();

}  // namespace mrg::verify
