#include "mrg/graphgen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

#include "mrg/recurrence.hpp"
#include "mrg/rng.hpp"
#include "parallel.hpp"

namespace mrg {

void GraphParams::validate() const {
  if (n < 1) throw std::invalid_argument("graph: n must be >= 1");
  if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("graph: p must lie in (0,1]");
  if (!(r > 0.0 && r <= 1.0)) throw std::invalid_argument("graph: r must lie in (0,1]");
}

EdgeProbTable::EdgeProbTable(std::int64_t length, double p, double r) : p_(p), r_(r) {
  if (length < 0) throw std::invalid_argument("edge table: negative length");
  if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("edge table: p must lie in (0,1]");
  if (!(r > 0.0 && r <= 1.0)) throw std::invalid_argument("edge table: r must lie in (0,1]");
  const double g = 1.0 - r;
  probs_.resize(static_cast<std::size_t>(length));
  log_survival_.resize(static_cast<std::size_t>(length));
  double cumulative = 0.0;
  for (std::size_t k = 0; k < probs_.size(); ++k) {
    probs_[k] = k == 0 ? p : recurrence::step(probs_[k - 1], g);
    if (k > 0) cumulative += std::log1p(-probs_[k]);
    log_survival_[k] = cumulative;
  }
}

double EdgeProbTable::prob(std::int64_t j) const {
  if (j < 1 || j > size()) throw std::out_of_range("edge table: index out of range");
  return probs_[static_cast<std::size_t>(j - 1)];
}

EdgeProbTable edge_prob_table(const GraphParams& params) {
  params.validate();
  return EdgeProbTable(params.n - 1, params.p, params.r);
}

TransitionMatrix transition_matrix(std::int64_t j, const EdgeProbTable& table, double r) {
  if (j < 1 || j > table.size() - 1) throw std::out_of_range("transition_matrix: index out of range");
  const double pj = table.prob(j);
  return {{{1.0 - pj, pj}, {1.0 - r * pj, r * pj}}};
}

TransitionMatrix multiply(const TransitionMatrix& lhs, const TransitionMatrix& rhs) noexcept {
  TransitionMatrix out{};
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) out[i][k] = lhs[i][0] * rhs[0][k] + lhs[i][1] * rhs[1][k];
  return out;
}

TransitionMatrix conditional_matrix(std::int64_t k, std::int64_t j, const EdgeProbTable& table,
                                    double r) {
  if (k < 1 || j <= k || j > table.size()) throw std::out_of_range("conditional_matrix: need 1 <= k < j <= n-1");
  TransitionMatrix m = transition_matrix(k, table, r);
  for (std::int64_t t = k + 1; t < j; ++t) m = multiply(m, transition_matrix(t, table, r));
  return m;
}

// ---------------------------------------------------------------------------

MarkovGraph::MarkovGraph(std::int64_t n, std::span<const std::pair<Vertex, Vertex>> edges,
                         GraphParams params)
    : n_(n), params_(params) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("graph: endpoint out of range");
    if (u == v) throw std::invalid_argument("graph: self-loop");
    ++offsets_[u + 1];
    ++offsets_[v + 1];
  }
  for (std::size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];
  neighbors_.resize(static_cast<std::size_t>(offsets_.back()));
  std::vector<std::int64_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    neighbors_[fill[u]++] = v;
    neighbors_[fill[v]++] = u;
  }
  for (Vertex v = 0; v < n; ++v) {
    auto first = neighbors_.begin() + offsets_[v];
    auto last = neighbors_.begin() + offsets_[v + 1];
    std::sort(first, last);
    if (std::adjacent_find(first, last) != last) throw std::invalid_argument("graph: duplicate edge");
  }
}

bool MarkovGraph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("graph: vertex out of range");
  if (degree(u) > degree(v)) std::swap(u, v);
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> MarkovGraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(static_cast<std::size_t>(edge_count()));
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

// ---------------------------------------------------------------------------

std::vector<Vertex> sample_chain(Vertex v, const EdgeProbTable& table, std::uint64_t seed) {
  std::vector<Vertex> out;
  if (v <= 0) return out;
  if (v > table.size()) throw std::out_of_range("sample_chain: vertex beyond table");
  SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(v)));
  const double r = table.r();
  const auto probs = table.values();
  const auto log_surv = table.log_survival();

  // Position j (1-based) of the chain is the edge to vertex j-1.
  std::int64_t j = 1;
  bool x = rng.bernoulli(probs[0]);
  if (x) out.push_back(0);
  while (j < v) {
    const double pj = probs[static_cast<std::size_t>(j - 1)];
    if (x || j == 1 || pj >= 1.0) {
      x = rng.bernoulli(x ? r * pj : pj);
      ++j;
      if (x) out.push_back(j - 1);
      continue;
    }
    // From X_j = 0 the chain stays at 0 through position k-1 with probability
    // prod_{s=j}^{k-1} (1 - p_s) = exp(C(k-1) - C(j-1)); invert that survival function.
    const double target = log_surv[static_cast<std::size_t>(j - 2)] + std::log(rng.uniform_pos());
    const auto first = log_surv.begin() + (j - 1);  // C(j)
    const auto last = log_surv.begin() + (v - 1);   // one past C(v-1)
    const auto hit = std::partition_point(first, last, [target](double c) { return c >= target; });
    if (hit == last) break;
    const std::int64_t m = (hit - log_surv.begin()) + 1;  // smallest m with C(m) < target
    j = m + 1;
    x = true;
    out.push_back(j - 1);
  }
  return out;
}

std::vector<Vertex> sample_chain_stepwise(Vertex v, const EdgeProbTable& table, std::uint64_t seed) {
  std::vector<Vertex> out;
  if (v <= 0) return out;
  if (v > table.size()) throw std::out_of_range("sample_chain: vertex beyond table");
  SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(v)));
  const auto probs = table.values();
  bool x = rng.bernoulli(probs[0]);
  if (x) out.push_back(0);
  for (std::int64_t j = 1; j < v; ++j) {
    const double pj = probs[static_cast<std::size_t>(j - 1)];
    x = rng.bernoulli(x ? table.r() * pj : pj);
    if (x) out.push_back(j);
  }
  return out;
}

MarkovGraph sample_graph(const GraphParams& params, int threads) {
  return sample_graph(params, edge_prob_table(params), threads);
}

MarkovGraph sample_graph(const GraphParams& params, const EdgeProbTable& table, int threads) {
  params.validate();
  if (table.size() < params.n - 1 || table.p() != params.p || table.r() != params.r)
    throw std::invalid_argument("sample_graph: table does not match parameters");
  std::vector<std::vector<Vertex>> lower(static_cast<std::size_t>(params.n));
  detail::parallel_for(params.n, threads, [&](std::int64_t v) {
    lower[static_cast<std::size_t>(v)] = sample_chain(v, table, params.seed);
  });
  std::size_t m = 0;
  for (const auto& l : lower) m += l.size();
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(m);
  for (Vertex v = 0; v < params.n; ++v)
    for (Vertex u : lower[static_cast<std::size_t>(v)]) edges.emplace_back(u, v);
  return MarkovGraph(params.n, edges, params);
}

// ---------------------------------------------------------------------------

double disconnection_probability(Vertex v, std::span<const Vertex> lower, const EdgeProbTable& table,
                                 double r) {
  if (lower.empty()) return 1.0;
  if (v > table.size()) throw std::out_of_range("disconnection_probability: vertex beyond table");
  for (std::size_t k = 0; k < lower.size(); ++k) {
    if (lower[k] < 0 || lower[k] >= v) throw std::invalid_argument("disconnection_probability: members must be below v");
    if (k > 0 && lower[k] <= lower[k - 1]) throw std::invalid_argument("disconnection_probability: members must be sorted and distinct");
  }
  const auto probs = table.values();
  // (zero, one) = P{X_j = 0/1 and every constrained position up to j is 0}.
  double zero = 1.0 - probs[0];
  double one = probs[0];
  std::size_t next = 0;
  const std::int64_t last = lower.back() + 1;
  for (std::int64_t j = 1;; ++j) {
    if (lower[next] + 1 == j) {
      one = 0.0;
      ++next;
    }
    if (j == last) break;
    const double pj = probs[static_cast<std::size_t>(j - 1)];
    const double z = zero * (1.0 - pj) + one * (1.0 - r * pj);
    const double o = zero * pj + one * r * pj;
    zero = z;
    one = o;
  }
  return zero;
}

double exact_subset_independence(const EdgeProbTable& table, double r, std::span<const Vertex> subset) {
  for (std::size_t k = 1; k < subset.size(); ++k)
    if (subset[k] <= subset[k - 1])
      throw std::invalid_argument("exact_subset_independence: subset must be sorted without duplicates");
  if (!subset.empty() && (subset.front() < 0 || subset.back() > table.size()))
    throw std::out_of_range("exact_subset_independence: vertex out of range");
  double prob = 1.0;
  for (std::size_t k = 1; k < subset.size(); ++k)
    prob *= disconnection_probability(subset[k], subset.first(k), table, r);
  return prob;
}

std::vector<double> subset_independence_by_enumeration(const EdgeProbTable& table, double r,
                                                       std::int64_t n) {
  if (n < 1 || n > 7) throw std::invalid_argument("enumeration: n must lie in [1, 7]");
  if (table.size() < n - 1) throw std::invalid_argument("enumeration: table too short");
  const auto probs = table.values();
  const int edge_bits = static_cast<int>(n * (n - 1) / 2);
  const std::uint32_t subsets = 1u << n;
  std::vector<double> result(subsets, 0.0);
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n));
  for (std::uint64_t outcome = 0; outcome < (1ull << edge_bits); ++outcome) {
    double weight = 1.0;
    std::fill(adj.begin(), adj.end(), 0u);
    for (std::int64_t v = 1; v < n; ++v) {
      const std::int64_t base = v * (v - 1) / 2;
      bool prev = false;
      for (std::int64_t j = 1; j <= v; ++j) {
        const bool x = (outcome >> (base + j - 1)) & 1u;
        double success = probs[0];
        if (j > 1) {
          const double pp = probs[static_cast<std::size_t>(j - 2)];
          success = prev ? r * pp : pp;
        }
        weight *= x ? success : 1.0 - success;
        if (x) {
          adj[static_cast<std::size_t>(v)] |= 1u << (j - 1);
          adj[static_cast<std::size_t>(j - 1)] |= 1u << v;
        }
        prev = x;
      }
    }
    if (weight == 0.0) continue;
    for (std::uint32_t s = 0; s < subsets; ++s) {
      bool independent = true;
      for (std::int64_t v = 0; v < n && independent; ++v)
        if ((s >> v) & 1u) independent = (adj[static_cast<std::size_t>(v)] & s) == 0;
      if (independent) result[s] += weight;
    }
  }
  return result;
}

ProbabilityBounds disconnection_bounds(std::int64_t i, std::int64_t m, const EdgeProbTable& table,
                                       double r) {
  if (m < 1) throw std::invalid_argument("disconnection_bounds: m must be >= 1");
  if (i < m + 1) throw std::invalid_argument("disconnection_bounds: need i >= m + 1");
  if (i - 1 > table.size()) throw std::out_of_range("disconnection_bounds: i beyond table");
  ProbabilityBounds b;
  b.lower = 1.0 - table.p();
  for (std::int64_t j = 1; j <= m - 1; ++j) b.lower *= 1.0 - table.prob(j);
  b.upper = 1.0;
  for (std::int64_t j = i - m; j <= i - 1; ++j) b.upper *= 1.0 - r * table.prob(j);
  return b;
}

double independence_threshold(double p, double r) {
  const double gp = (1.0 - r) * p;
  const double tau = recurrence::step(gp, 1.0);
  if (tau <= 0.0) return std::numeric_limits<double>::infinity();
  const double t = 1.0 / tau - 1.0;
  return t * t;
}

double independence_prob_upper(std::int64_t n, std::int64_t k, double p, double r) {
  if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("independence_prob_upper: p must lie in (0,1]");
  if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("independence_prob_upper: r must lie in (0,1)");
  if (k < 1 || k > n) throw std::invalid_argument("independence_prob_upper: need 1 <= k <= n");
  const double threshold = independence_threshold(p, r);
  if (static_cast<double>(n - k + 1) < threshold) {
    std::ostringstream msg;
    msg << "independence_prob_upper: n - k + 1 = " << (n - k + 1)
        << " is below the validity threshold (1/tau - 1)^2 = " << threshold;
    throw std::domain_error(msg.str());
  }
  const double ratio = r / (1.0 - r);
  double log_bound = 0.0;
  for (std::int64_t i = 1; i <= k - 1; ++i) {
    const double s = std::sqrt(static_cast<double>(n - i)) + 1.0;
    if (ratio / (s * s) >= 1.0) throw std::domain_error("independence_prob_upper: factor leaves [0,1)");
    log_bound += static_cast<double>(i) * std::log1p(-ratio / (s * s));
  }
  return std::exp(log_bound);
}

}  // namespace mrg
