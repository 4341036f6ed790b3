#include "mrg/bernoulli.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mrg/recurrence.hpp"
#include "mrg/rng.hpp"
#include "parallel.hpp"

namespace mrg::bernoulli {

void ChainParams::validate() const {
  if (!(p1 > 0.0 && p1 <= 1.0)) throw std::invalid_argument("chain: p1 must lie in (0,1]");
  if (!(beta > 0.0 && beta <= 1.0)) throw std::invalid_argument("chain: beta must lie in (0,1]");
  if (n < 1) throw std::invalid_argument("chain: n must be >= 1");
}

std::vector<double> marginals(const ChainParams& params) {
  params.validate();
  std::vector<double> p(static_cast<std::size_t>(params.n));
  p[0] = params.p1;
  for (std::size_t k = 1; k < p.size(); ++k) p[k] = recurrence::step(p[k - 1], params.beta);
  return p;
}

std::vector<std::int64_t> simulate_checkpoints(const ChainParams& params,
                                               std::span<const std::int64_t> checkpoints) {
  params.validate();
  if (!std::is_sorted(checkpoints.begin(), checkpoints.end()) ||
      (!checkpoints.empty() && (checkpoints.front() < 1 || checkpoints.back() > params.n)))
    throw std::invalid_argument("simulate_checkpoints: checkpoints must be ascending within [1, n]");
  SplitMix64 rng(params.seed);
  const double decay = 1.0 - params.beta;
  std::vector<std::int64_t> out;
  out.reserve(checkpoints.size());
  std::size_t next = 0;
  double pk = params.p1;
  bool y = rng.bernoulli(pk);
  std::int64_t sum = y;
  for (std::int64_t k = 1;; ++k) {
    while (next < checkpoints.size() && checkpoints[next] == k) {
      out.push_back(sum);
      ++next;
    }
    if (next == checkpoints.size()) break;
    y = rng.bernoulli(y ? decay * pk : pk);
    sum += y;
    pk = recurrence::step(pk, params.beta);
  }
  return out;
}

std::int64_t simulate_chain(const ChainParams& params, std::vector<std::uint8_t>* trajectory) {
  params.validate();
  if (trajectory == nullptr) {
    const std::int64_t last = params.n;
    return simulate_checkpoints(params, std::span(&last, 1)).front();
  }
  SplitMix64 rng(params.seed);
  const double decay = 1.0 - params.beta;
  trajectory->assign(static_cast<std::size_t>(params.n), 0);
  double pk = params.p1;
  bool y = rng.bernoulli(pk);
  (*trajectory)[0] = y;
  std::int64_t sum = y;
  for (std::int64_t k = 1; k < params.n; ++k) {
    y = rng.bernoulli(y ? decay * pk : pk);
    (*trajectory)[static_cast<std::size_t>(k)] = y;
    sum += y;
    pk = recurrence::step(pk, params.beta);
  }
  return sum;
}

double exact_mean_partial_sum(const ChainParams& params) {
  params.validate();
  double sum = 0.0;
  double comp = 0.0;
  double pk = params.p1;
  for (std::int64_t k = 1; k <= params.n; ++k) {
    const double t = sum + pk;
    comp += std::abs(sum) >= std::abs(pk) ? (sum - t) + pk : (pk - t) + sum;
    sum = t;
    pk = recurrence::step(pk, params.beta);
  }
  return sum + comp;
}

std::vector<double> exact_second_moment_prefix(const ChainParams& params, std::int64_t limit) {
  params.validate();
  if (params.n > limit)
    throw std::invalid_argument("exact_second_moment: n = " + std::to_string(params.n) +
                                " exceeds the quadratic-cost limit " + std::to_string(limit));
  const auto p = marginals(params);
  const auto n = p.size();
  // joint[j] = sum_{i<j} P{Y_i = 1, Y_j = 1}
  std::vector<double> joint(n, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    double q = 1.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      q = p[j - 1] * (1.0 - params.beta * q);
      joint[j] += p[i] * q;
    }
  }
  std::vector<double> out(n);
  double mean = 0.0;
  double cross = 0.0;
  for (std::size_t m = 0; m < n; ++m) {
    mean += p[m];
    cross += joint[m];
    out[m] = mean + 2.0 * cross;
  }
  return out;
}

MomentSummary exact_second_moment(const ChainParams& params, std::int64_t limit) {
  const auto prefix = exact_second_moment_prefix(params, limit);
  MomentSummary s;
  s.n = params.n;
  s.source = MomentSource::exact;
  s.mean_Sn = exact_mean_partial_sum(params);
  s.second_moment_Sn = prefix.back();
  s.variance = std::max(0.0, s.second_moment_Sn - s.mean_Sn * s.mean_Sn);
  return s;
}

MomentSummary empirical_moments(const ChainParams& params, std::int64_t trials, int threads) {
  params.validate();
  if (trials < 1) throw std::invalid_argument("empirical_moments: trials must be >= 1");
  std::vector<std::int64_t> sums(static_cast<std::size_t>(trials));
  detail::parallel_for(trials, threads, [&](std::int64_t t) {
    ChainParams local = params;
    local.seed = derive_seed(params.seed, static_cast<std::uint64_t>(t));
    sums[static_cast<std::size_t>(t)] = simulate_chain(local);
  });
  MomentSummary s;
  s.n = params.n;
  s.source = MomentSource::empirical;
  s.trials = trials;
  double m1 = 0.0;
  double m2 = 0.0;
  for (auto v : sums) {
    m1 += static_cast<double>(v);
    m2 += static_cast<double>(v) * static_cast<double>(v);
  }
  s.mean_Sn = m1 / static_cast<double>(trials);
  s.second_moment_Sn = m2 / static_cast<double>(trials);
  s.variance = std::max(0.0, s.second_moment_Sn - s.mean_Sn * s.mean_Sn);
  return s;
}

double moment_bound(const ChainParams& params) {
  params.validate();
  if (params.n < 2) throw std::invalid_argument("moment_bound: n must be >= 2");
  const double b = params.beta;
  const double l = std::log(static_cast<double>(params.n)) / b;
  return 2.0 * (1.0 - b) / b * exact_mean_partial_sum(params) + l * l;
}

std::vector<ConcentrationRow> concentration_report(const ChainParams& params,
                                                   std::span<const std::int64_t> n_grid,
                                                   std::int64_t trials, double eps,
                                                   std::int64_t max_empirical_n, int threads) {
  params.validate();
  if (trials < 1) throw std::invalid_argument("concentration_report: trials must be >= 1");
  if (n_grid.empty() || !std::is_sorted(n_grid.begin(), n_grid.end()) || n_grid.front() < 2)
    throw std::invalid_argument("concentration_report: n grid must be ascending with n >= 2");
  std::vector<ConcentrationRow> rows(n_grid.size());
  std::vector<std::int64_t> empirical_ns;
  for (std::size_t g = 0; g < n_grid.size(); ++g) {
    ChainParams at = params;
    at.n = n_grid[g];
    const double mean = exact_mean_partial_sum(at);
    const double logn = std::log(static_cast<double>(at.n));
    rows[g].n = at.n;
    rows[g].exact_mean_Y = mean / logn;
    rows[g].scaled_exact_mean = params.beta * mean / logn;
    if (at.n <= max_empirical_n) empirical_ns.push_back(at.n);
  }
  if (empirical_ns.empty()) return rows;

  ChainParams longest = params;
  longest.n = empirical_ns.back();
  std::vector<std::vector<std::int64_t>> sums(static_cast<std::size_t>(trials));
  detail::parallel_for(trials, threads, [&](std::int64_t t) {
    ChainParams local = longest;
    local.seed = derive_seed(params.seed, static_cast<std::uint64_t>(t));
    sums[static_cast<std::size_t>(t)] = simulate_checkpoints(local, empirical_ns);
  });
  for (std::size_t g = 0; g < empirical_ns.size(); ++g) {
    auto& row = rows[g];
    const double logn = std::log(static_cast<double>(row.n));
    double total = 0.0;
    std::int64_t tail = 0;
    for (const auto& s : sums) {
      const double y = static_cast<double>(s[g]) / logn;
      total += y;
      if (std::abs(y - 1.0 / params.beta) > eps / params.beta) ++tail;
    }
    row.has_empirical = true;
    row.trials = trials;
    row.empirical_mean_Y = total / static_cast<double>(trials);
    row.tail_count = tail;
    row.tail_prob = static_cast<double>(tail) / static_cast<double>(trials);
    row.tail_ci = stats::wilson(tail, trials);
  }
  return rows;
}

PaleyZygmundCheck paley_zygmund_check(const ChainParams& params, double theta, std::int64_t trials,
                                      int threads) {
  if (!(theta >= 0.0 && theta < 1.0)) throw std::invalid_argument("paley_zygmund_check: theta must lie in [0,1)");
  const auto exact = exact_second_moment(params);
  std::vector<std::int64_t> sums(static_cast<std::size_t>(trials));
  detail::parallel_for(trials, threads, [&](std::int64_t t) {
    ChainParams local = params;
    local.seed = derive_seed(params.seed, static_cast<std::uint64_t>(t));
    sums[static_cast<std::size_t>(t)] = simulate_chain(local);
  });
  const double level = (1.0 - theta) * exact.mean_Sn;
  const auto hits = std::count_if(sums.begin(), sums.end(),
                                  [level](std::int64_t s) { return static_cast<double>(s) >= level; });
  PaleyZygmundCheck c;
  c.theta = theta;
  c.n = params.n;
  c.trials = trials;
  c.empirical = static_cast<double>(hits) / static_cast<double>(trials);
  c.ci = stats::wilson(hits, trials);
  c.bound = theta * theta * exact.mean_Sn * exact.mean_Sn / exact.second_moment_Sn;
  c.holds = c.ci.upper >= c.bound;
  return c;
}

// ---------------------------------------------------------------------------

double midpoint_rule(double lo, double hi, std::int64_t /*k*/) { return 0.5 * (lo + hi); }

void SandwichSetup::validate() const {
  if (!(p1 > 0.0 && p1 <= 1.0)) throw std::invalid_argument("sandwich: p1 must lie in (0,1]");
  if (n < 1) throw std::invalid_argument("sandwich: n must be >= 1");
  const auto need = static_cast<std::size_t>(n - 1);
  if (a_seq.size() < need || b_seq.size() < need)
    throw std::invalid_argument("sandwich: sequences must have at least n-1 terms");
  for (std::size_t k = 0; k < need; ++k) {
    if (!(a_seq[k] > 0.0 && a_seq[k] <= 1.0) || !(b_seq[k] > 0.0 && b_seq[k] <= 1.0))
      throw std::invalid_argument("sandwich: sequence terms must lie in (0,1]");
    if (a_seq[k] < b_seq[k])
      throw std::invalid_argument("sandwich: need a_k >= b_k so that f_{a_k} <= f_{b_k}");
  }
  if (!rule) throw std::invalid_argument("sandwich: missing selection rule");
}

std::vector<double> sandwiched_marginals(const SandwichSetup& setup) {
  setup.validate();
  std::vector<double> p(static_cast<std::size_t>(setup.n));
  p[0] = setup.p1;
  for (std::size_t k = 1; k < p.size(); ++k) {
    const double lo = recurrence::step(p[k - 1], setup.a_seq[k - 1]);
    const double hi = recurrence::step(p[k - 1], setup.b_seq[k - 1]);
    const double pick = setup.rule(lo, hi, static_cast<std::int64_t>(k));
    if (!(pick >= lo && pick <= hi)) throw std::domain_error("sandwich: selection rule left [lo, hi]");
    p[k] = pick;
  }
  return p;
}

std::int64_t sandwiched_chain(const SandwichSetup& setup, std::vector<std::uint8_t>* trajectory) {
  const auto p = sandwiched_marginals(setup);
  SplitMix64 rng(setup.seed);
  if (trajectory) trajectory->assign(p.size(), 0);
  bool y = rng.bernoulli(p[0]);
  if (trajectory) (*trajectory)[0] = y;
  std::int64_t sum = y;
  for (std::size_t k = 1; k < p.size(); ++k) {
    const double prev = p[k - 1];
    // Effective coefficient of this step; lies in [b_k, a_k] up to rounding.
    const double beta_k = std::clamp((1.0 - p[k] / prev) / prev, 0.0, 1.0);
    y = rng.bernoulli(y ? (1.0 - beta_k) * prev : prev);
    if (trajectory) (*trajectory)[k] = y;
    sum += y;
  }
  return sum;
}

std::pair<std::vector<double>, std::vector<double>> sandwich_envelopes(const SandwichSetup& setup) {
  setup.validate();
  std::vector<double> lower(static_cast<std::size_t>(setup.n));
  std::vector<double> upper(static_cast<std::size_t>(setup.n));
  lower[0] = upper[0] = setup.p1;
  for (std::size_t k = 1; k < lower.size(); ++k) {
    lower[k] = recurrence::step(lower[k - 1], setup.a_seq[k - 1]);
    upper[k] = recurrence::step(upper[k - 1], setup.b_seq[k - 1]);
  }
  return {std::move(lower), std::move(upper)};
}

}  // namespace mrg::bernoulli
