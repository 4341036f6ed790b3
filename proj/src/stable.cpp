#include "mrg/stable.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

namespace mrg::stable {

bool is_independent(const MarkovGraph& graph, std::span<const Vertex> set) {
  std::vector<char> in(static_cast<std::size_t>(graph.vertex_count()), 0);
  for (Vertex v : set) {
    if (v < 0 || v >= graph.vertex_count() || in[v]) return false;
    in[v] = 1;
  }
  for (Vertex v : set)
    for (Vertex u : graph.neighbors(v))
      if (in[u]) return false;
  return true;
}

bool is_maximal_independent(const MarkovGraph& graph, std::span<const Vertex> set) {
  if (!is_independent(graph, set)) return false;
  std::vector<char> covered(static_cast<std::size_t>(graph.vertex_count()), 0);
  for (Vertex v : set) {
    covered[v] = 1;
    for (Vertex u : graph.neighbors(v)) covered[u] = 1;
  }
  return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

VertexSet greedy_in_order(const MarkovGraph& graph, std::span<const Vertex> order) {
  const auto n = graph.vertex_count();
  if (static_cast<std::int64_t>(order.size()) != n)
    throw std::invalid_argument("greedy_in_order: order must be a permutation of all vertices");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (Vertex v : order) {
    if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("greedy_in_order: order is not a permutation");
    seen[v] = 1;
  }
  std::vector<char> blocked(static_cast<std::size_t>(n), 0);
  VertexSet out;
  for (Vertex v : order) {
    if (blocked[v]) continue;
    out.push_back(v);
    for (Vertex u : graph.neighbors(v)) blocked[u] = 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet greedy_in_order(const MarkovGraph& graph) {
  std::vector<Vertex> order(static_cast<std::size_t>(graph.vertex_count()));
  std::iota(order.begin(), order.end(), Vertex{0});
  return greedy_in_order(graph, order);
}

VertexSet greedy_min_degree(const MarkovGraph& graph) {
  const auto n = graph.vertex_count();
  std::vector<std::int64_t> deg(static_cast<std::size_t>(n));
  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  std::set<std::pair<std::int64_t, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = graph.degree(v);
    queue.emplace(deg[v], v);
  }
  auto remove = [&](Vertex v) {
    queue.erase({deg[v], v});
    alive[v] = 0;
  };
  VertexSet out;
  while (!queue.empty()) {
    const Vertex v = queue.begin()->second;
    out.push_back(v);
    remove(v);
    std::vector<Vertex> dropped;
    for (Vertex u : graph.neighbors(v)) {
      if (!alive[u]) continue;
      remove(u);
      dropped.push_back(u);
    }
    for (Vertex u : dropped) {
      for (Vertex w : graph.neighbors(u)) {
        if (!alive[w]) continue;
        queue.erase({deg[w], w});
        --deg[w];
        queue.emplace(deg[w], w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

namespace {

class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t bits) : words_((bits + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

  std::int64_t count() const {
    std::int64_t c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  std::int64_t count_and(const Bitset& other) const {
    std::int64_t c = 0;
    for (std::size_t k = 0; k < words_.size(); ++k) c += std::popcount(words_[k] & other.words_[k]);
    return c;
  }
  bool any() const {
    return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
  }
  /// Index of the lowest set bit, or -1.
  std::int64_t first() const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k]) return static_cast<std::int64_t>(k * 64 + std::countr_zero(words_[k]));
    return -1;
  }
  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      for (std::uint64_t w = words_[k]; w; w &= w - 1)
        fn(static_cast<std::int64_t>(k * 64 + std::countr_zero(w)));
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  Bitset& subtract(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }

 private:
  std::vector<std::uint64_t> words_;
};

class BranchAndBound {
 public:
  BranchAndBound(const MarkovGraph& graph, std::uint64_t budget) : budget_(budget) {
    const auto n = static_cast<std::size_t>(graph.vertex_count());
    adj_.assign(n, Bitset(n));
    for (std::size_t v = 0; v < n; ++v)
      for (Vertex u : graph.neighbors(static_cast<Vertex>(v))) adj_[v].set(static_cast<std::size_t>(u));
  }

  AlphaResult run(std::int64_t initial_incumbent) {
    incumbent_ = initial_incumbent;
    Bitset all(adj_.size());
    for (std::size_t v = 0; v < adj_.size(); ++v) all.set(v);
    const bool done = search(all, 0);
    AlphaResult res;
    res.nodes = nodes_;
    res.exact = done;
    res.lower = incumbent_;
    res.value = incumbent_;
    res.upper = done ? incumbent_ : std::max(incumbent_, open_upper_);
    return res;
  }

 private:
  // Partition `p` greedily into cliques; the count bounds alpha of the induced subgraph.
  std::int64_t clique_cover(Bitset p) const {
    std::int64_t cliques = 0;
    for (std::int64_t v = p.first(); v >= 0; v = p.first()) {
      Bitset candidates = p;
      candidates &= adj_[static_cast<std::size_t>(v)];
      p.reset(static_cast<std::size_t>(v));
      for (std::int64_t u = candidates.first(); u >= 0; u = candidates.first()) {
        p.reset(static_cast<std::size_t>(u));
        candidates.reset(static_cast<std::size_t>(u));
        candidates &= adj_[static_cast<std::size_t>(u)];
      }
      ++cliques;
    }
    return cliques;
  }

  std::int64_t bound(const Bitset& p, std::int64_t size) const {
    const std::int64_t residual = p.count();
    if (size + residual <= incumbent_) return size + residual;
    return size + std::min(residual, clique_cover(p));
  }

  // Returns false when the budget ran out inside this subtree; unexplored parts then raise
  // open_upper_ to their bound.
  bool search(Bitset p, std::int64_t size) {
    if (++nodes_ > budget_) {
      open_upper_ = std::max(open_upper_, size + p.count());
      return false;
    }
    // Vertices of residual degree <= 1 belong to some maximum independent set.
    for (bool reduced = true; reduced;) {
      reduced = false;
      p.for_each([&](std::int64_t v) {
        if (!p.test(static_cast<std::size_t>(v))) return;
        const auto& nv = adj_[static_cast<std::size_t>(v)];
        if (p.count_and(nv) <= 1) {
          p.subtract(nv);
          p.reset(static_cast<std::size_t>(v));
          ++size;
          reduced = true;
        }
      });
    }
    if (!p.any()) {
      incumbent_ = std::max(incumbent_, size);
      return true;
    }
    if (bound(p, size) <= incumbent_) return true;

    std::int64_t pivot = -1;
    std::int64_t pivot_deg = -1;
    p.for_each([&](std::int64_t v) {
      const auto d = p.count_and(adj_[static_cast<std::size_t>(v)]);
      if (d > pivot_deg) {
        pivot_deg = d;
        pivot = v;
      }
    });

    Bitset take = p;
    take.subtract(adj_[static_cast<std::size_t>(pivot)]);
    take.reset(static_cast<std::size_t>(pivot));
    Bitset skip = p;
    skip.reset(static_cast<std::size_t>(pivot));

    if (!search(std::move(take), size + 1)) {
      open_upper_ = std::max(open_upper_, bound(skip, size));
      return false;
    }
    if (bound(skip, size) <= incumbent_) return true;
    return search(std::move(skip), size);
  }

  std::vector<Bitset> adj_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::int64_t incumbent_ = 0;
  std::int64_t open_upper_ = 0;
};

}  // namespace

AlphaResult exact_alpha(const MarkovGraph& graph, std::uint64_t budget) {
  if (budget == 0) throw std::invalid_argument("exact_alpha: budget must be positive");
  if (graph.vertex_count() > 4096) throw std::invalid_argument("exact_alpha: graph too large (n > 4096)");
  const auto warm = static_cast<std::int64_t>(greedy_min_degree(graph).size());
  return BranchAndBound(graph, budget).run(warm);
}

DegreeStats degree_stats(const MarkovGraph& graph) {
  DegreeStats s;
  const auto n = graph.vertex_count();
  s.m = graph.edge_count();
  if (n == 0) return s;
  s.min_deg = graph.degree(0);
  s.max_deg = graph.degree(0);
  for (Vertex v = 1; v < n; ++v) {
    s.min_deg = std::min(s.min_deg, graph.degree(v));
    s.max_deg = std::max(s.max_deg, graph.degree(v));
  }
  s.avg_deg = 2.0 * static_cast<double>(s.m) / static_cast<double>(n);
  return s;
}

double turan_bounds(std::int64_t n, std::int64_t m) {
  if (n < 1) throw std::invalid_argument("turan_bounds: n must be >= 1");
  if (m < 0 || m > n * (n - 1) / 2) throw std::invalid_argument("turan_bounds: m out of range");
  const auto nd = static_cast<double>(n);
  const auto md = static_cast<double>(m);
  return std::max(nd * nd / (nd + 2.0 * md), (2.0 * nd - md) / 3.0);
}

double performance_ratio(std::int64_t alpha_reference, std::int64_t found) {
  if (found < 1) throw std::invalid_argument("performance_ratio: empty set");
  if (alpha_reference < found) throw std::invalid_argument("performance_ratio: reference below found size");
  return static_cast<double>(alpha_reference) / static_cast<double>(found);
}

}  // namespace mrg::stable
