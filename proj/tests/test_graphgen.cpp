#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "mrg/graphgen.hpp"
#include "mrg/recurrence.hpp"
#include "mrg/rng.hpp"
#include "oracles.hpp"

using namespace mrg;

TEST_CASE("edge probability table") {
  const auto flat = edge_prob_table({10, 0.5, 1.0, 0});
  for (double v : flat.values()) CHECK(v == 0.5);

  const auto t = edge_prob_table({200, 0.5, 0.5, 0});
  CHECK(t.prob(1) == 0.5);
  CHECK(t.prob(2) == 0.375);
  CHECK(t.prob(3) == 0.3046875);
  CHECK(t.prob(100) < 0.02);
  CHECK_THROWS(t.prob(0));
  CHECK_THROWS(t.prob(200));

  const auto ref = oracle::marginals(t.size(), 0.5, 0.5);
  const double g = t.gamma();
  for (std::int64_t j = 2; j <= t.size(); ++j) {
    CHECK(t.prob(j) == doctest::Approx(ref[j - 1]).epsilon(1e-14));
    CHECK(t.prob(j) < t.prob(j - 1));
    CHECK(t.prob(j) <= 1.0 / (g * static_cast<double>(j)));
    CHECK(t.prob(j) >= recurrence::term_bounds(j, {0.5, g, j}).lower * (1 - 1e-12));
    // law of total probability
    const double q = t.prob(j - 1);
    CHECK(q * (1 - q) + 0.5 * q * q == doctest::Approx(t.prob(j)).epsilon(1e-15));
  }
}

TEST_CASE("transition matrices") {
  const EdgeProbTable t(20, 0.5, 0.5);
  const auto m = transition_matrix(1, t, 0.5);
  CHECK(m[0][0] == 0.5);
  CHECK(m[0][1] == 0.5);
  CHECK(m[1][0] == 0.75);
  CHECK(m[1][1] == 0.25);
  for (std::int64_t j = 1; j < t.size(); ++j) {
    const auto mj = transition_matrix(j, t, 0.5);
    CHECK(mj[0][0] + mj[0][1] == 1.0);
    CHECK(mj[1][0] + mj[1][1] == 1.0);
  }
  const EdgeProbTable flat(5, 0.3, 1.0);
  const auto mf = transition_matrix(2, flat, 1.0);
  CHECK(mf[0] == mf[1]);
  CHECK_THROWS(transition_matrix(0, t, 0.5));
  CHECK_THROWS(transition_matrix(20, t, 0.5));
}

TEST_CASE("conditional probability sandwich") {
  const double r = 0.5;
  const EdgeProbTable t(201, 0.7, r);
  for (std::int64_t j = 2; j <= 200; ++j) {
    const double q = t.prob(j - 1);
    for (std::int64_t k = 1; k < j; ++k) {
      const auto c = conditional_matrix(k, j, t, r);
      REQUIRE(c[0][0] >= 1 - q - 1e-15);
      REQUIRE(c[0][0] <= 1 - r * q + 1e-15);
      REQUIRE(c[1][1] >= r * q - 1e-15);
      REQUIRE(c[1][1] <= q + 1e-15);
    }
  }
}

TEST_CASE("sample graph basics") {
  const auto one = sample_graph({1, 0.5, 0.5, 3});
  CHECK(one.vertex_count() == 1);
  CHECK(one.edge_count() == 0);
  for (std::uint64_t seed = 0; seed < 20; ++seed) CHECK(sample_graph({2, 1.0, 0.5, seed}).has_edge(0, 1));

  const GraphParams params{300, 0.6, 0.4, 77};
  const auto a = sample_graph(params, 1);
  const auto b = sample_graph(params, 4);
  CHECK(a == b);
  CHECK(a.seed_used() == 77);
  CHECK(!(a == sample_graph({300, 0.6, 0.4, 78})));

  for (Vertex v = 0; v < a.vertex_count(); ++v) {
    const auto nb = a.neighbors(v);
    CHECK(std::is_sorted(nb.begin(), nb.end()));
    for (Vertex u : nb) {
      CHECK(u != v);
      CHECK(a.has_edge(u, v));
    }
  }
  CHECK_THROWS(sample_graph({0, 0.5, 0.5, 0}));
  CHECK_THROWS(sample_graph({5, 0.0, 0.5, 0}));
  CHECK_THROWS(sample_graph({5, 0.5, 1.5, 0}));
}

TEST_CASE("skip sampler matches the stepwise chain in law") {
  const EdgeProbTable t(40, 0.8, 0.3);
  const int trials = 40'000;
  std::vector<double> fast(40, 0.0);
  std::vector<double> slow(40, 0.0);
  for (int s = 0; s < trials; ++s) {
    for (Vertex u : sample_chain(40, t, s)) fast[u] += 1;
    for (Vertex u : sample_chain_stepwise(40, t, s + 1'000'000)) slow[u] += 1;
  }
  for (int j = 0; j < 40; ++j) {
    const double pj = t.values()[j];
    const double sigma = std::sqrt(pj * (1 - pj) / trials);
    CHECK(std::abs(fast[j] / trials - pj) <= 4.5 * sigma);
    CHECK(std::abs(slow[j] / trials - pj) <= 4.5 * sigma);
  }
}

TEST_CASE("chains of different vertices are uncorrelated") {
  const EdgeProbTable t(10, 0.5, 0.5);
  const int trials = 40'000;
  double both = 0, first = 0, second = 0;
  for (int s = 0; s < trials; ++s) {
    const auto g = sample_graph({10, 0.5, 0.5, static_cast<std::uint64_t>(s)}, t);
    const bool x = g.has_edge(3, 8);
    const bool y = g.has_edge(3, 9);
    both += x && y;
    first += x;
    second += y;
  }
  const double cov = both / trials - (first / trials) * (second / trials);
  CHECK(std::abs(cov) < 4.0 * 0.25 / std::sqrt(static_cast<double>(trials)));
}

TEST_CASE("exact subset independence") {
  const EdgeProbTable t(9, 0.5, 0.5);
  const std::vector<Vertex> single{3};
  CHECK(exact_subset_independence(t, 0.5, single) == 1.0);
  const std::vector<Vertex> v12{0, 1};
  CHECK(exact_subset_independence(t, 0.5, v12) == doctest::Approx(0.5));
  const std::vector<Vertex> v23{1, 2};
  CHECK(exact_subset_independence(t, 0.5, v23) == doctest::Approx(0.625));
  const std::vector<Vertex> unsorted{2, 1};
  CHECK_THROWS(exact_subset_independence(t, 0.5, unsorted));
  const std::vector<Vertex> dup{1, 1};
  CHECK_THROWS(exact_subset_independence(t, 0.5, dup));

  for (const auto& [p, r] : {std::pair{0.5, 0.5}, std::pair{0.9, 0.2}, std::pair{0.3, 1.0}}) {
    for (int n : {5, 6}) {
      const EdgeProbTable table(n - 1, p, r);
      const auto brute = oracle::subset_independence(n, p, r);
      const auto lib = subset_independence_by_enumeration(table, r, n);
      for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<Vertex> subset;
        for (int v = 0; v < n; ++v)
          if ((mask >> v) & 1u) subset.push_back(v);
        REQUIRE(std::abs(exact_subset_independence(table, r, subset) - brute[mask]) < 1e-12);
        REQUIRE(std::abs(lib[mask] - brute[mask]) < 1e-12);
      }
    }
  }
}

TEST_CASE("disconnection bounds") {
  const double p = 0.5, r = 0.5;
  const EdgeProbTable t(12, p, r);
  const std::int64_t i = 10, m = 4;
  const auto b = disconnection_bounds(i, m, t, r);
  std::vector<int> pick(9, 0);
  std::fill(pick.begin(), pick.begin() + m, 1);
  int subsets = 0;
  do {
    std::vector<Vertex> lower;
    for (int k = 0; k < 9; ++k)
      if (pick[k]) lower.push_back(k);
    const double exact = disconnection_probability(i - 1, lower, t, r);
    CHECK(b.lower <= exact + 1e-15);
    CHECK(exact <= b.upper + 1e-15);
    ++subsets;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  CHECK(subsets == 126);

  const auto one = disconnection_bounds(6, 1, t, r);
  CHECK(one.lower == doctest::Approx(1 - p));
  CHECK(one.upper == doctest::Approx(1 - r * t.prob(5)));
  CHECK_THROWS(disconnection_bounds(3, 3, t, r));
  CHECK_THROWS(disconnection_bounds(5, 0, t, r));
}

TEST_CASE("independence probability upper bound") {
  CHECK(independence_prob_upper(40, 1, 0.9, 0.1) == 1.0);
  double prev = 1.0;
  for (std::int64_t k = 1; k <= 8; ++k) {
    const double b = independence_prob_upper(40, k, 0.9, 0.1);
    CHECK(b <= prev);
    CHECK(b > 0.0);
    prev = b;
  }
  CHECK(independence_threshold(0.9, 0.1) == doctest::Approx(std::pow(1.0 / (0.81 * 0.19) - 1.0, 2)));
  try {
    independence_prob_upper(20, 5, 0.9, 0.1);
    FAIL("expected a domain error");
  } catch (const std::domain_error& e) {
    CHECK(std::string(e.what()).find("threshold") != std::string::npos);
  }

  const EdgeProbTable t(39, 0.9, 0.1);
  const double bound = independence_prob_upper(40, 5, 0.9, 0.1);
  SplitMix64 rng(5);
  std::vector<Vertex> all(40);
  std::iota(all.begin(), all.end(), 0);
  for (int s = 0; s < 100; ++s) {
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<Vertex> subset(all.begin(), all.begin() + 5);
    std::sort(subset.begin(), subset.end());
    CHECK(exact_subset_independence(t, 0.1, subset) <= bound);
  }
}

TEST_CASE("derive_seed") {
  CHECK(derive_seed(42, 7) == derive_seed(42, 7));
  std::vector<std::uint64_t> seeds;
  for (std::uint64_t i = 0; i < 1'000'000; ++i) seeds.push_back(derive_seed(12345, i));
  std::sort(seeds.begin(), seeds.end());
  CHECK(std::adjacent_find(seeds.begin(), seeds.end()) == seeds.end());
  double flipped = 0;
  int samples = 0;
  for (std::uint64_t master = 1; master < 200; ++master)
    for (int bit = 0; bit < 64; ++bit) {
      flipped += __builtin_popcountll(derive_seed(master, 3) ^ derive_seed(master ^ (1ull << bit), 3));
      ++samples;
    }
  CHECK(flipped / samples >= 20.0);
}
