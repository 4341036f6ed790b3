#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mrg/graphgen.hpp"

// Independent sets: greedy in a given order, minimum-degree greedy, exact alpha by
// branch and bound, and vertex/edge-count statistics.
namespace mrg::stable {

/// Sorted vertex ids.
using VertexSet = std::vector<Vertex>;

struct DegreeStats {
  std::int64_t m = 0;
  std::int64_t min_deg = 0;
  std::int64_t max_deg = 0;
  double avg_deg = 0.0;  // 2m/n
};

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct AlphaResult {
  bool exact = false;       // false: the node budget ran out
  std::int64_t value = 0;   // alpha when exact, else the incumbent
  std::int64_t lower = 0;   // incumbent size
  std::int64_t upper = 0;   // == lower when exact
  std::uint64_t nodes = 0;  // branch nodes expanded
};

bool is_independent(const MarkovGraph& graph, std::span<const Vertex> set);
/// Independent and no outside vertex can be added.
bool is_maximal_independent(const MarkovGraph& graph, std::span<const Vertex> set);

/// Scans `order` (a permutation of 0..n-1) and keeps each vertex with no kept neighbour.
VertexSet greedy_in_order(const MarkovGraph& graph, std::span<const Vertex> order);
/// greedy_in_order over v_1, ..., v_n.
VertexSet greedy_in_order(const MarkovGraph& graph);

/// Repeatedly takes a minimum-degree vertex of the residual graph (lowest id on ties) and
/// deletes its closed neighbourhood.
VertexSet greedy_min_degree(const MarkovGraph& graph);

/// Exact alpha by branching on a maximum-degree residual vertex v:
/// alpha(G) = max(alpha(G - v), 1 + alpha(G - N[v])), pruned by the incumbent against the
/// residual size and a greedy clique-cover bound. Throws for n > 4096.
AlphaResult exact_alpha(const MarkovGraph& graph, std::uint64_t budget = kDefaultBudget);

DegreeStats degree_stats(const MarkovGraph& graph);

/// max{n^2/(n+2m), (2n-m)/3}; a lower bound on alpha for every graph with these counts.
double turan_bounds(std::int64_t n, std::int64_t m);

/// alpha_reference / found.
double performance_ratio(std::int64_t alpha_reference, std::int64_t found);

}  // namespace mrg::stable
