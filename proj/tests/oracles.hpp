#pragma once

// Brute-force reference computations used only by the tests. They share no code with
// the library beyond plain types.

#include <cmath>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace oracle {

/// P{X_j = 1} for j = 1..len by propagating the two-state law of the chain
/// (X_1 ~ Bernoulli(p); after a 0 the next success has prob q_j, after a 1 it has r q_j,
/// where q_j is the marginal itself). Only the definition of the chain is used.
inline std::vector<double> marginals(std::int64_t len, double p, double r) {
  std::vector<double> out;
  double one = p;  // P{X_j = 1}
  for (std::int64_t j = 0; j < len; ++j) {
    out.push_back(one);
    one = (1.0 - one) * one + one * (r * one);
  }
  return out;
}

/// Probability of one chain outcome x_1..x_len (bit k of `bits` = x_{k+1}).
inline double chain_path_probability(std::uint64_t bits, int len, const std::vector<double>& q, double r) {
  double prob = 1.0;
  bool prev = false;
  for (int k = 0; k < len; ++k) {
    const bool x = (bits >> k) & 1u;
    const double success = k == 0 ? q[0] : (prev ? r * q[static_cast<std::size_t>(k - 1)] : q[static_cast<std::size_t>(k - 1)]);
    prob *= x ? success : 1.0 - success;
    prev = x;
  }
  return prob;
}

/// Element `mask` = P{vertex set `mask` is independent} in G(n, p, r), by summing over
/// every one of the 2^(n(n-1)/2) graphs. n <= 7.
inline std::vector<double> subset_independence(int n, double p, double r) {
  const auto q = marginals(n, p, r);
  const int edges = n * (n - 1) / 2;
  std::vector<double> out(std::size_t{1} << n, 0.0);
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n));
  for (std::uint64_t g = 0; g < (std::uint64_t{1} << edges); ++g) {
    double prob = 1.0;
    std::fill(adj.begin(), adj.end(), 0u);
    int bit = 0;
    for (int v = 1; v < n; ++v) {
      std::uint64_t chain = 0;
      for (int u = 0; u < v; ++u, ++bit) {
        if ((g >> bit) & 1u) {
          chain |= std::uint64_t{1} << u;
          adj[static_cast<std::size_t>(v)] |= 1u << u;
          adj[static_cast<std::size_t>(u)] |= 1u << v;
        }
      }
      prob *= chain_path_probability(chain, v, q, r);
    }
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
      bool independent = true;
      for (int v = 0; v < n && independent; ++v)
        if (((s >> v) & 1u) && (adj[static_cast<std::size_t>(v)] & s)) independent = false;
      if (independent) out[s] += prob;
    }
  }
  return out;
}

/// Largest independent set by trying every subset; adjacency as bit rows, n <= 20.
inline int exhaustive_alpha(const std::vector<std::uint32_t>& adj) {
  const int n = static_cast<int>(adj.size());
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool independent = true;
    for (int v = 0; v < n && independent; ++v)
      if (((s >> v) & 1u) && (adj[static_cast<std::size_t>(v)] & s)) independent = false;
    if (independent) best = std::max(best, __builtin_popcount(s));
  }
  return best;
}

inline bool is_prime(std::int64_t k) {
  if (k < 2) return false;
  for (std::int64_t d = 2; d * d <= k; ++d)
    if (k % d == 0) return false;
  return true;
}

inline std::int64_t primes_up_to(std::int64_t n) {
  std::int64_t c = 0;
  for (std::int64_t k = 2; k <= n; ++k) c += is_prime(k);
  return c;
}

inline double central_difference(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

/// E[S_n] and E[S_n^2] of the dependent Bernoulli chain by enumerating all 2^n paths.
inline std::pair<double, double> chain_moments(int n, double p1, double beta) {
  std::vector<double> q(static_cast<std::size_t>(n));
  q[0] = p1;
  for (int k = 1; k < n; ++k) q[static_cast<std::size_t>(k)] = q[static_cast<std::size_t>(k - 1)] * (1.0 - beta * q[static_cast<std::size_t>(k - 1)]);
  double m1 = 0.0;
  double m2 = 0.0;
  for (std::uint64_t path = 0; path < (std::uint64_t{1} << n); ++path) {
    double prob = 1.0;
    bool prev = false;
    for (int k = 0; k < n; ++k) {
      const bool y = (path >> k) & 1u;
      const double success =
          k == 0 ? q[0] : (prev ? (1.0 - beta) * q[static_cast<std::size_t>(k - 1)] : q[static_cast<std::size_t>(k - 1)]);
      prob *= y ? success : 1.0 - success;
      prev = y;
    }
    const double s = __builtin_popcountll(path);
    m1 += prob * s;
    m2 += prob * s * s;
  }
  return {m1, m2};
}

}  // namespace oracle
