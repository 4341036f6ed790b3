#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "mrg/recurrence.hpp"

using namespace mrg::recurrence;

TEST_CASE("step") {
  CHECK(step(0.0, 0.7) == 0.0);
  CHECK(step(0.5, 1.0) == 0.25);
  CHECK(step(0.8, 0.5) == doctest::Approx(0.48).epsilon(1e-15));
  for (double x : {0.1, 0.5, 0.9})
    for (double a : {0.2, 0.6, 1.0}) {
      CHECK(step(x, a) > 0.0);
      CHECK(step(x, a) < x);
      CHECK(a * step(x, a) == doctest::Approx(step(a * x, 1.0)).epsilon(1e-15));
    }
  CHECK(step(0.5, 0.9) < step(0.5, 0.3));
}

TEST_CASE("vertex and maximum of f_a") {
  for (double a : {0.25, 0.5, 1.0}) {
    CHECK(step(vertex(a), a) == doctest::Approx(maximum(a)));
    CHECK(step(vertex(a) * 0.99, a) < maximum(a));
    CHECK(step(vertex(a) * 1.01, a) < maximum(a));
  }
}

TEST_CASE("generate") {
  const auto xs = generate({0.5, 1.0, 3});
  REQUIRE(xs.size() == 3);
  CHECK(xs[0] == 0.5);
  CHECK(xs[1] == 0.25);
  CHECK(xs[2] == 0.1875);
  CHECK(generate({0.5, 1.0, 1}) == std::vector<double>{0.5});
  const auto ys = generate({0.9, 0.5, 2});
  CHECK(ys[1] == doctest::Approx(0.495).epsilon(1e-15));
  const auto long_run = generate({0.3, 0.4, 1000});
  for (std::size_t i = 1; i < long_run.size(); ++i) CHECK(long_run[i] < long_run[i - 1]);
  CHECK_THROWS_AS(generate({0.0, 1.0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(generate({0.5, 1.5, 3}), std::invalid_argument);
  CHECK_THROWS_AS(generate({0.5, 1.0, 0}), std::invalid_argument);
}

TEST_CASE("term bounds") {
  const RecurrenceParams params{0.5, 1.0, 2};
  const auto b = term_bounds(2, params);
  CHECK(b.upper == 0.25);  // min{1/4, 1/3}
  CHECK(b.lower <= 0.25);
  CHECK_THROWS_AS(term_bounds(1, params), std::invalid_argument);

  const std::int64_t n = 1'000'000;
  const auto xs = generate({0.5, 1.0, n});
  const auto big = term_bounds(n, {0.5, 1.0, n});
  const double s = std::sqrt(static_cast<double>(n)) + 1.0;
  CHECK(big.lower == doctest::Approx(1.0 / (s * s)).epsilon(1e-15));
  CHECK(xs.back() >= big.lower);
  CHECK(xs.back() <= big.upper);

  // The corrected maximum 1/(4a): the a^2/4 form fails at a = 0.5, x1 = 0.99.
  const auto x2 = generate({0.99, 0.5, 2})[1];
  CHECK(x2 > 0.0625);
  CHECK(x2 <= term_bounds(2, {0.99, 0.5, 2}).upper);
}

TEST_CASE("term bounds sandwich on a grid") {
  for (double x1 = 0.05; x1 < 0.96; x1 += 0.15)
    for (double a = 0.05; a <= 1.0; a += 0.19) {
      const RecurrenceParams params{x1, a, 20'000};
      const auto xs = generate(params);
      for (std::int64_t n = 2; n <= params.n; ++n) {
        const auto b = term_bounds(n, params);
        REQUIRE(b.lower <= xs[n - 1]);
        REQUIRE(xs[n - 1] <= b.upper);
      }
    }
}

TEST_CASE("partial sum bounds") {
  for (const auto& [a, n] : {std::pair{1.0, std::int64_t{10'000}}, std::pair{0.5, std::int64_t{100'000}}}) {
    const RecurrenceParams params{0.5, a, n};
    const auto xs = generate(params);
    double sum = 0.0;
    for (double x : xs) sum += x;
    const auto iv = partial_sum_bounds(n, params);
    CHECK(iv.lower <= sum);
    CHECK(sum <= iv.upper);
  }
  const RecurrenceParams wide{0.5, 1.0, 1};
  const auto w6 = partial_sum_bounds(1'000'000, wide);
  const auto w3 = partial_sum_bounds(1'000, wide);
  CHECK(w6.upper - w6.lower < 3.0);
  CHECK(w6.upper - w6.lower == doctest::Approx(w3.upper - w3.lower).epsilon(0.05));

  // y1 = 0.01: threshold (1/f_1(0.01) - 1)^2 ~ 1e4
  const RecurrenceParams small{0.01, 1.0, 1};
  CHECK(threshold(0.01) > 9000.0);
  CHECK_THROWS_AS(partial_sum_bounds(100, small), std::invalid_argument);
  CHECK_NOTHROW(partial_sum_bounds(20'000, small));
}

TEST_CASE("eta and ell") {
  const double f1 = 0.25;
  CHECK(eta(0.5) == doctest::Approx(2.0 * (1 - f1) * std::log(f1) - (2.5 + std::log(2.0)) * f1));
  CHECK(threshold(0.5) == 9.0);
  CHECK(ell(4, 0.5) == 0.0625);       // below the threshold: f_1(y)/n
  CHECK(ell(9, 0.5) == 1.0 / 16.0);   // at the threshold: 1/(sqrt(n)+1)^2
}

TEST_CASE("harmonic") {
  CHECK(harmonic(1).value == 1.0);
  CHECK(harmonic(4).value == doctest::Approx(25.0 / 12.0).epsilon(1e-15));
  CHECK(harmonic(10).value <= std::log(11.0) + 1.0);
  for (std::int64_t n : {1, 2, 3, 10, 100, 12345, 1'000'000}) {
    const auto h = harmonic(n);
    long double naive = 0.0L;
    for (std::int64_t i = 1; i <= n; ++i) naive += 1.0L / i;
    CHECK(h.value == doctest::Approx(static_cast<double>(naive)).epsilon(1e-15));
    CHECK(h.lower <= h.value);
    CHECK(h.value <= h.upper);
  }
  CHECK_THROWS_AS(harmonic(0), std::invalid_argument);
}
