#include <algorithm>
#include <vector>

#include "doctest.h"
#include "mrg/stable.hpp"
#include "oracles.hpp"

using namespace mrg;
using Edges = std::vector<std::pair<Vertex, Vertex>>;

namespace {

MarkovGraph make(std::int64_t n, const Edges& e) { return MarkovGraph(n, e); }

std::vector<std::uint32_t> bit_rows(const MarkovGraph& g) {
  std::vector<std::uint32_t> rows(static_cast<std::size_t>(g.vertex_count()), 0u);
  for (const auto& [u, v] : g.edges()) {
    rows[static_cast<std::size_t>(u)] |= 1u << v;
    rows[static_cast<std::size_t>(v)] |= 1u << u;
  }
  return rows;
}

MarkovGraph petersen() {
  Edges e;
  for (Vertex i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});
    e.push_back({i, i + 5});
    e.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return make(10, e);
}

}  // namespace

TEST_CASE("graph construction rejects bad edge lists") {
  CHECK_THROWS(make(3, {{0, 0}}));
  CHECK_THROWS(make(3, {{0, 1}, {1, 0}}));
  CHECK_THROWS(make(3, {{0, 3}}));
}

TEST_CASE("small named graphs") {
  const auto path = make(4, {{0, 1}, {1, 2}, {2, 3}});
  const auto star = make(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  const auto k4 = make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  const auto c5 = make(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  const auto pet = petersen();

  CHECK(stable::exact_alpha(path).value == 2);
  CHECK(stable::exact_alpha(star).value == 4);
  CHECK(stable::exact_alpha(k4).value == 1);
  CHECK(stable::exact_alpha(c5).value == 2);
  CHECK(stable::exact_alpha(pet).value == 4);
  CHECK(stable::exact_alpha(pet).exact);

  CHECK(stable::greedy_in_order(path) == stable::VertexSet{0, 2});
  CHECK(stable::greedy_in_order(star) == stable::VertexSet{0});
  CHECK(stable::greedy_min_degree(star) == stable::VertexSet{1, 2, 3, 4});
  const std::vector<Vertex> order{3, 2, 1, 0};
  CHECK(stable::greedy_in_order(path, order) == stable::VertexSet{1, 3});

  const auto s = stable::degree_stats(star);
  CHECK(s.m == 4);
  CHECK(s.min_deg == 1);
  CHECK(s.max_deg == 4);
  CHECK(s.avg_deg == doctest::Approx(1.6));

  const std::vector<Vertex> ind{1, 3};
  const std::vector<Vertex> not_ind{0, 1};
  CHECK(stable::is_independent(path, ind));
  CHECK(!stable::is_independent(path, not_ind));
  const std::vector<Vertex> small{0};
  CHECK(!stable::is_maximal_independent(path, small));
  const std::vector<Vertex> maximal{0, 3};
  CHECK(stable::is_maximal_independent(path, maximal));
}

TEST_CASE("Turan-type lower bound") {
  CHECK(stable::turan_bounds(10, 0) == doctest::Approx(10.0));
  CHECK(stable::turan_bounds(4, 6) == doctest::Approx(1.0));
  CHECK(stable::turan_bounds(5, 1) == doctest::Approx(25.0 / 7.0));
  CHECK(stable::turan_bounds(13, 13) == doctest::Approx(13.0 / 3.0));
  CHECK(stable::performance_ratio(10, 4) == doctest::Approx(2.5));
}

TEST_CASE("exact alpha, greedy and Turan against exhaustive search") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const std::int64_t n = 2 + static_cast<std::int64_t>(seed % 11);
    const double p = 0.2 + 0.6 * static_cast<double>(seed % 7) / 6.0;
    const auto g = sample_graph({n, p, 0.3 + 0.1 * static_cast<double>(seed % 5), seed});
    const int alpha = oracle::exhaustive_alpha(bit_rows(g));
    const auto a = stable::exact_alpha(g);
    REQUIRE(a.exact);
    REQUIRE(a.value == alpha);
    const auto g1 = stable::greedy_in_order(g);
    const auto g2 = stable::greedy_min_degree(g);
    REQUIRE(stable::is_maximal_independent(g, g1));
    REQUIRE(stable::is_maximal_independent(g, g2));
    REQUIRE(static_cast<int>(g2.size()) <= alpha);
    REQUIRE(stable::turan_bounds(n, g.edge_count()) <= alpha + 1e-12);
  }
}

TEST_CASE("exact alpha reports an exhausted budget") {
  const auto g = sample_graph({300, 0.5, 0.5, 4});
  const auto a = stable::exact_alpha(g, 50);
  CHECK(!a.exact);
  CHECK(a.lower <= a.upper);
  CHECK(a.lower > 0);
  CHECK(a.value == a.lower);
}
