#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

// Markov random graph model: vertices v_1..v_n (0-based ids 0..n-1 in code).
// For every target vertex v_i the indicators X^i_1..X^i_{i-1} of the edges to
// lower vertices form a two-state chain whose success probability drops by the
// decay factor r right after an edge.
namespace mrg {

using Vertex = std::int64_t;

struct GraphParams {
  std::int64_t n = 1;
  double p = 0.5;  // initial probability, (0,1]
  double r = 1.0;  // decay, (0,1]
  std::uint64_t seed = 0;

  double gamma() const noexcept { return 1.0 - r; }
  void validate() const;
};

/// Marginals p_1..p_{n-1}: p_1 = p, p_j = p_{j-1}(1 - gamma p_{j-1}).
/// The edge (u, v), u < v (0-based), is present with probability values()[u].
class EdgeProbTable {
 public:
  EdgeProbTable() = default;
  EdgeProbTable(std::int64_t length, double p, double r);

  std::int64_t size() const noexcept { return static_cast<std::int64_t>(probs_.size()); }
  double p() const noexcept { return p_; }
  double r() const noexcept { return r_; }
  double gamma() const noexcept { return 1.0 - r_; }

  /// p_j for 1 <= j <= size().
  double prob(std::int64_t j) const;
  std::span<const double> values() const noexcept { return probs_; }

  /// C(m) = sum_{s=2..m} log(1 - p_s), C(1) = 0; index m-1 holds C(m).
  std::span<const double> log_survival() const noexcept { return log_survival_; }

 private:
  double p_ = 0.0;
  double r_ = 1.0;
  std::vector<double> probs_;
  std::vector<double> log_survival_;
};

EdgeProbTable edge_prob_table(const GraphParams& params);

/// Row-stochastic 2x2 matrix indexed [previous][next].
using TransitionMatrix = std::array<std::array<double, 2>, 2>;

/// Law of X_{j+1} given X_j: rows (1-p_j, p_j) and (1-r p_j, r p_j). 1 <= j <= size()-1.
TransitionMatrix transition_matrix(std::int64_t j, const EdgeProbTable& table, double r);

TransitionMatrix multiply(const TransitionMatrix& lhs, const TransitionMatrix& rhs) noexcept;

/// Law of X_j given X_k for k < j: P_k P_{k+1} ... P_{j-1}.
TransitionMatrix conditional_matrix(std::int64_t k, std::int64_t j, const EdgeProbTable& table,
                                    double r);

/// Simple undirected graph with sorted CSR adjacency.
class MarkovGraph {
 public:
  MarkovGraph() = default;
  /// Builds from an edge list (0-based, any order). Rejects self-loops, duplicates and
  /// out-of-range endpoints.
  MarkovGraph(std::int64_t n, std::span<const std::pair<Vertex, Vertex>> edges,
              GraphParams params = {});

  std::int64_t vertex_count() const noexcept { return n_; }
  std::int64_t edge_count() const noexcept { return static_cast<std::int64_t>(neighbors_.size()) / 2; }
  std::int64_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {neighbors_.data() + offsets_[v], static_cast<std::size_t>(degree(v))};
  }
  bool has_edge(Vertex u, Vertex v) const;

  /// Each edge once, as (u, v) with u < v, sorted.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  const GraphParams& params() const noexcept { return params_; }
  std::uint64_t seed_used() const noexcept { return params_.seed; }

  friend bool operator==(const MarkovGraph& a, const MarkovGraph& b) {
    return a.n_ == b.n_ && a.offsets_ == b.offsets_ && a.neighbors_ == b.neighbors_;
  }

 private:
  std::int64_t n_ = 0;
  std::vector<std::int64_t> offsets_{0};
  std::vector<Vertex> neighbors_;
  GraphParams params_;
};

/// Lower neighbours of vertex `v` (0-based), i.e. the successes of its chain, in increasing
/// order. The chain is driven by the substream derive_seed(seed, v).
std::vector<Vertex> sample_chain(Vertex v, const EdgeProbTable& table, std::uint64_t seed);

/// Same law as sample_chain, one Bernoulli draw per position; used as a cross-check.
std::vector<Vertex> sample_chain_stepwise(Vertex v, const EdgeProbTable& table, std::uint64_t seed);

/// Samples G(n, p, r). Output depends only on params (not on `threads`).
MarkovGraph sample_graph(const GraphParams& params, int threads = 1);
MarkovGraph sample_graph(const GraphParams& params, const EdgeProbTable& table, int threads = 1);

/// Exact P{v is adjacent to none of `lower`}, where every member of `lower` is < v.
/// `lower` must be sorted and duplicate-free.
double disconnection_probability(Vertex v, std::span<const Vertex> lower, const EdgeProbTable& table,
                                 double r);

/// Exact P{subset is independent}: product of disconnection probabilities of each member
/// from its predecessors, each by forward marginalisation along the member's chain.
double exact_subset_independence(const EdgeProbTable& table, double r, std::span<const Vertex> subset);

/// Brute force over all 2^(n(n-1)/2) edge outcomes; element `mask` of the result is
/// P{vertex set `mask` is independent}. n <= 7.
std::vector<double> subset_independence_by_enumeration(const EdgeProbTable& table, double r,
                                                       std::int64_t n);

struct ProbabilityBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// Bounds on P{v_i disconnected from A} over all A of size m below v_i (1-based i, i >= m+1):
///   (1-p) prod_{j=1}^{m-1} (1-p_j)  <=  .  <=  prod_{j=i-m}^{i-1} (1 - r p_j).
ProbabilityBounds disconnection_bounds(std::int64_t i, std::int64_t m, const EdgeProbTable& table,
                                       double r);

/// (1/tau - 1)^2 with tau = f_1(gamma p).
double independence_threshold(double p, double r);

/// prod_{i=1}^{k-1} (1 - (r/gamma) / (sqrt(n-i)+1)^2)^i, valid when n-k+1 >= independence_threshold.
double independence_prob_upper(std::int64_t n, std::int64_t k, double p, double r);

}  // namespace mrg
