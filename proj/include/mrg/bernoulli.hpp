#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "mrg/stats.hpp"

// Dependent Bernoulli sequence Y_1, Y_2, ...: Y_1 ~ Bernoulli(p1) and
//   P{Y_{k+1} = 1 | Y_k = 0} = p_k,   P{Y_{k+1} = 1 | Y_k = 1} = (1 - beta) p_k,
// so the marginals follow p_{k+1} = p_k (1 - beta p_k). With beta = 1 - r this is the
// edge chain of one vertex of the Markov random graph.
namespace mrg::bernoulli {

struct ChainParams {
  double p1 = 0.5;    // (0,1]
  double beta = 0.5;  // (0,1]
  std::int64_t n = 1;
  std::uint64_t seed = 0;

  void validate() const;
};

enum class MomentSource { exact, empirical };

struct MomentSummary {
  double mean_Sn = 0.0;
  double second_moment_Sn = 0.0;
  double variance = 0.0;
  std::int64_t n = 0;
  MomentSource source = MomentSource::exact;
  std::int64_t trials = 0;  // empirical only
};

inline constexpr std::int64_t kSecondMomentLimit = 20'000;

std::vector<double> marginals(const ChainParams& params);

/// S_n for the stream seeded by params.seed; optionally records Y_1..Y_n.
std::int64_t simulate_chain(const ChainParams& params, std::vector<std::uint8_t>* trajectory = nullptr);

/// Partial sums S_m at each checkpoint m (ascending, <= params.n) of one trajectory.
std::vector<std::int64_t> simulate_checkpoints(const ChainParams& params,
                                               std::span<const std::int64_t> checkpoints);

/// E[S_n] = p_1 + ... + p_n.
double exact_mean_partial_sum(const ChainParams& params);

/// E[S_m^2] for m = 1..n (index m-1), using
/// E[S^2] = E[S] + 2 sum_{i<j} P{Y_i = 1, Y_j = 1} and the exact conditional
/// q_{t+1} = p_t (1 - beta q_t) started from q_i = 1. O(n^2).
std::vector<double> exact_second_moment_prefix(const ChainParams& params,
                                               std::int64_t limit = kSecondMomentLimit);
MomentSummary exact_second_moment(const ChainParams& params, std::int64_t limit = kSecondMomentLimit);

/// Sample moments of S_n over `trials` substreams derive_seed(params.seed, t).
MomentSummary empirical_moments(const ChainParams& params, std::int64_t trials, int threads = 1);

/// (2(1-beta)/beta) E[S_n] + (log n / beta)^2, n >= 2.
double moment_bound(const ChainParams& params);

struct ConcentrationRow {
  std::int64_t n = 0;
  double exact_mean_Y = 0.0;       // E[S_n] / log n
  double scaled_exact_mean = 0.0;  // beta E[S_n] / log n
  bool has_empirical = false;
  std::int64_t trials = 0;
  double empirical_mean_Y = 0.0;
  std::int64_t tail_count = 0;  // #{|Y_n - 1/beta| > eps/beta}
  double tail_prob = 0.0;
  stats::Interval tail_ci;
};

/// One row per n in `n_grid` (ascending, each >= 2). The exact column is deterministic;
/// empirical columns are filled for n <= max_empirical_n from `trials` seeded trajectories.
std::vector<ConcentrationRow> concentration_report(const ChainParams& params,
                                                   std::span<const std::int64_t> n_grid,
                                                   std::int64_t trials, double eps = 0.5,
                                                   std::int64_t max_empirical_n = 100'000,
                                                   int threads = 1);

struct PaleyZygmundCheck {
  double theta = 0.0;
  std::int64_t n = 0;
  std::int64_t trials = 0;
  double empirical = 0.0;  // P{S_n >= (1-theta) E S_n}
  stats::Interval ci;      // Wilson 95%
  double bound = 0.0;      // theta^2 (E S_n)^2 / E[S_n^2]
  bool holds = false;      // ci.upper >= bound
};

PaleyZygmundCheck paley_zygmund_check(const ChainParams& params, double theta, std::int64_t trials,
                                      int threads = 1);

/// Picks p_{k+1} inside [lo, hi] = [f_{a_k}(p_k), f_{b_k}(p_k)].
using SelectionRule = std::function<double(double lo, double hi, std::int64_t k)>;

double midpoint_rule(double lo, double hi, std::int64_t k);

struct SandwichSetup {
  std::vector<double> a_seq;  // a_k, k = 1..n-1, in (0,1]
  std::vector<double> b_seq;  // b_k <= a_k, in (0,1]
  double p1 = 0.5;
  std::int64_t n = 1;
  std::uint64_t seed = 0;
  SelectionRule rule = midpoint_rule;

  void validate() const;
};

std::vector<double> sandwiched_marginals(const SandwichSetup& setup);

/// Simulates a Markov chain with the sandwiched marginals: the step k -> k+1 uses the
/// decay 1 - beta_k where p_{k+1} = f_{beta_k}(p_k).
std::int64_t sandwiched_chain(const SandwichSetup& setup, std::vector<std::uint8_t>* trajectory = nullptr);

/// Pure recurrences l_{k+1} = f_{a_k}(l_k) and u_{k+1} = f_{b_k}(u_k) from p1.
std::pair<std::vector<double>, std::vector<double>> sandwich_envelopes(const SandwichSetup& setup);

}  // namespace mrg::bernoulli
