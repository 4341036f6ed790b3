#include <cmath>
#include <numbers>

#include "doctest.h"
#include "mrg/theory.hpp"
#include "oracles.hpp"

using namespace mrg::theory;

TEST_CASE("f_r values and derivatives") {
  for (double r : {0.1, 0.5, 0.9}) {
    CHECK(f_r_eval(1e-12, r) > 0.0);
    CHECK(std::abs(f_r_eval(1e-12, r)) < 1e-10);
    CHECK(f_r_eval(1.0 - 1e-12, r) < 0.0);
    for (double c : {0.05, 0.3, 0.6, 0.9}) {
      auto f = [r](double x) { return f_r_eval(x, r); };
      auto df = [r](double x) { return f_r_derivative(x, r); };
      CHECK(f_r_derivative(c, r) == doctest::Approx(oracle::central_difference(f, c, 1e-6)).epsilon(1e-6));
      CHECK(f_r_second_derivative(c, r) == doctest::Approx(oracle::central_difference(df, c, 1e-6)).epsilon(1e-5));
      CHECK(f_r_eval_t(-std::log1p(-c), r) == doctest::Approx(f_r_eval(c, r)).epsilon(1e-13));
    }
  }
  CHECK_THROWS(f_r_eval(0.0, 0.5));
  CHECK_THROWS(f_r_eval(0.5, 1.0));
  CHECK_THROWS(f_r_eval_t(-1.0, 0.5));
}

TEST_CASE("positive root of f_r") {
  const auto half = upper_root(0.5);
  CHECK(half.converged);
  CHECK(half.c_star == doctest::Approx(0.838787531372105).epsilon(1e-12));
  CHECK(half.margin == doctest::Approx(std::exp(-0.5) + 0.05 - half.c_star));
  double prev = 1.0;
  for (double r = 0.05; r < 1.0; r += 0.05) {
    const auto root = upper_root(r);
    CHECK(root.converged);
    CHECK(root.residual <= 1e-12);
    CHECK(root.c_star <= prev);  // the root decreases with r
    prev = root.c_star;
    CHECK(std::exp(root.log_one_minus_c) == doctest::Approx(1.0 - root.c_star).epsilon(1e-9));
  }
  // for small r the root sits just below 1 and only log(1-c) resolves it
  const auto tiny = upper_root(0.01);
  CHECK(tiny.converged);
  CHECK(tiny.log_one_minus_c < -50.0);
  CHECK(upper_constant(0.0) == 1.0);
}

TEST_CASE("alpha bounds") {
  const double e2 = std::exp(2.0);
  const auto lower = alpha_lower(e2, 0.5, 1.0);
  REQUIRE(lower.size() == 3);
  CHECK(lower[0].value == doctest::Approx(0.5 / 3.0 * e2 / 2.0));
  CHECK(lower[0].kind == BoundKind::lower);
  CHECK_THROWS(alpha_lower(100.0, 0.5, 0.0));
  CHECK_THROWS(alpha_lower(100.0, 1.0, 0.5));

  const auto upper = alpha_upper(1000.0, 0.5, 0.01);
  REQUIRE(upper.size() == 2);
  CHECK(upper[0].value == doctest::Approx((std::exp(-0.5) + 0.05) * 1000.0));
  CHECK(upper[1].value == doctest::Approx((upper_root(0.5).c_star + 0.01) * 1000.0));
  CHECK(alpha_upper(1000.0, 1.0).size() == 1);
  CHECK(std::string(to_string(upper[0].kind)) == "upper");
}

TEST_CASE("prime counting") {
  CHECK(prime_count(1) == 0);
  CHECK(prime_count(2) == 1);
  CHECK(prime_count(10) == 4);
  CHECK(prime_count(100) == 25);
  CHECK(prime_count(10'000) == oracle::primes_up_to(10'000));
  for (std::int64_t n = 17; n <= 10'000; n += 97)
    CHECK(static_cast<double>(prime_count(n)) >= static_cast<double>(n) / std::log(static_cast<double>(n)));
}

TEST_CASE("degree, chromatic and greedy values") {
  const auto d = degree_bounds(1000.0, 0.5, 0.5);
  CHECK(d[0].value == doctest::Approx(4.5 * std::log(1000.0)));
  CHECK(d[1].value == doctest::Approx(3.5 * std::log(1000.0)));
  CHECK(d[2].kind == BoundKind::target);

  const auto k4 = chromatic_bounds(4, 6, 0.5, 0.5);
  CHECK(k4[0].value == doctest::Approx(4.0));
  CHECK(chromatic_bounds(1000, 0, 0.5, 0.5)[0].value == doctest::Approx(1.0));
  const auto big = chromatic_bounds(1000, 100, 0.5, 0.5);
  REQUIRE(big.size() == 3);
  CHECK(big[1].value == doctest::Approx(1.0 / (1.0 - 3.5 / 168.0)));
  CHECK_THROWS(chromatic_bounds(4, 8, 0.5, 0.5));

  CHECK(greedy_exponent(0.5) == doctest::Approx(1.0 / 3.0));
  CHECK(greedy_exponent_ceiling(0.5) == doctest::Approx(1.0 / 3.0));
  CHECK(greedy_exponent_ceiling(0.6) == doctest::Approx(0.25));
  CHECK(greedy_exponent(0.0) == doctest::Approx(0.5));
  CHECK(greedy_bound(1e6, 0.5)[0].value == doctest::Approx(100.0));
  CHECK(min_degree_ratio_bound(4.0) == 3.0);
  CHECK_THROWS(greedy_exponent(1.0));

  const auto pr = performance_ratio_bounds(1000.0, 0.5, 0.5);
  CHECK(pr[0].value == doctest::Approx(std::pow(1000.0, 1.0 / 1.5)));
  CHECK(pr[1].value == doctest::Approx(1.0 + 2.5 * std::log(1000.0)));
}

TEST_CASE("root brackets a sign change and the upper constant is nontrivial") {
  const double tol = 1e-12;
  for (double r : {0.3, 0.5, 0.8, 0.95}) {
    const auto root = upper_root(r, tol);
    CHECK(f_r_eval(root.c_star - 1e4 * tol, r) > 0.0);
    CHECK(f_r_eval(root.c_star + 1e4 * tol, r) < 0.0);
  }
  CHECK(upper_constant(1.0) == doctest::Approx(0.4679).epsilon(1e-4));
  for (double r = 0.01; r <= 1.0; r += 0.01) CHECK(upper_constant(r) < 1.0);
}

TEST_CASE("prime form of the lower bound tracks the n/log n form") {
  for (double n : {1e3, 1e4, 1e5, 1e6}) {
    const auto b = alpha_lower(n, 0.5, 0.5);
    CHECK(b[1].value <= b[0].value * 1.2);
    CHECK(b[1].value >= b[0].value * 0.5);
  }
}
