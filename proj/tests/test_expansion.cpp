#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "ramex/expansion.hpp"
#include "ramex/families.hpp"
#include "test_util.hpp"

using namespace ramex;

TEST_CASE("truncate_support basics") {
  const auto t = ones_table<Rational>(10);
  const auto cut = truncate_support(t, 4);
  CHECK(cut.n_max() == 4);
  for (std::int64_t d = 1; d <= 4; ++d) CHECK(cut.at(d) == Rational(1));
  CHECK_THROWS_AS(cut.at(5), std::out_of_range);

  const auto same = truncate_support(t, t.n_max());
  for (std::int64_t d = 1; d <= 10; ++d) CHECK(same.at(d) == t.at(d));

  // extending pads with zeros (f' vanishes beyond its extent)
  const auto wide = truncate_support(t, 12);
  CHECK(wide.at(10) == Rational(1));
  CHECK(wide.at(11) == Rational(0));
  CHECK(wide.at(12) == Rational(0));
}

TEST_CASE("divisor-family coefficients at N = 4 are harmonic partial sums") {
  const auto fprime = ones_table<Rational>(4);
  const auto exp = expansion_coeffs(fprime, 4);
  CHECK(exp.support() == 4);
  CHECK(exp.at(1) == make_ratio(25, 12));
  CHECK(exp.at(2) == make_ratio(3, 4));
  CHECK(exp.at(3) == make_ratio(1, 3));
  CHECK(exp.at(4) == make_ratio(1, 4));
  CHECK_THROWS_AS(exp.at(5), std::out_of_range);
  CHECK(exp.at_or_zero(5) == Rational(0));
}

TEST_CASE("unit family has the trivial expansion") {
  const auto fprime = dirichlet_identity<Rational>(9);
  const auto exp = expansion_coeffs(fprime, 9);
  CHECK(exp.at(1) == Rational(1));
  for (std::int64_t r = 2; r <= 9; ++r) CHECK(exp.at(r) == Rational(0));
}

TEST_CASE("single-point support") {
  std::mt19937 rng(11);
  const auto fprime = testutil::random_rational_table(rng, 1);
  const auto exp = expansion_coeffs(fprime, 1);
  CHECK(exp.at(1) == fprime.at(1));
}

TEST_CASE("coefficients match the direct double-loop oracle") {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const std::int64_t N = 5 + trial * 7;  // up to 68
    const auto fprime = testutil::random_rational_table(rng, N);
    const auto exp = expansion_coeffs(fprime, N);
    for (std::int64_t r = 1; r <= N; ++r) {
      CHECK(exp.at(r) == testutil::expansion_coeff_oracle(fprime, N, r));
    }
  }
}

TEST_CASE("dual inversion recovers f' of the divisor family") {
  SieveTables tables(10);
  const auto exp = expansion_coeffs(ones_table<Rational>(4), 4);
  const auto fprime = dual_invert(exp, tables);
  // spot value r = 2: 2 (mu(1) 3/4 + mu(2) 1/4) = 2 (3/4 - 1/4) = 1
  CHECK(fprime.at(2) == Rational(1));
  for (std::int64_t r = 1; r <= 4; ++r) CHECK(fprime.at(r) == Rational(1));
}

TEST_CASE("dual inversion of the trivial expansion is delta1") {
  SieveTables tables(8);
  FiniteExpansion<Rational> exp(8, "trivial");
  exp.at(1) = Rational(1);
  const auto fprime = dual_invert(exp, tables);
  CHECK(fprime.at(1) == Rational(1));
  for (std::int64_t r = 2; r <= 8; ++r) CHECK(fprime.at(r) == Rational(0));
}

TEST_CASE("expansion_coeffs and dual_invert are mutually inverse") {
  SieveTables tables(60);
  std::mt19937 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const std::int64_t N = 1 + static_cast<std::int64_t>(rng() % 60);
    const auto fprime = testutil::random_rational_table(rng, N);
    const auto exp = expansion_coeffs(fprime, N);
    const auto back = dual_invert(exp, tables);
    for (std::int64_t r = 1; r <= N; ++r) CHECK(back.at(r) == fprime.at(r));
    // and the other composition order
    const auto exp2 = expansion_coeffs(back, N);
    for (std::int64_t r = 1; r <= N; ++r) CHECK(exp2.at(r) == exp.at(r));
  }
}

TEST_CASE("evaluate reconstructs d(n) from the N = 4 expansion") {
  SieveTables tables(10);
  const auto exp = expansion_coeffs(ones_table<Rational>(4), 4);
  CHECK(evaluate(exp, 4, tables) == Rational(3));  // d(4) = 3
  CHECK(evaluate(exp, 1, tables) == Rational(1));
  CHECK(evaluate(exp, 2, tables) == Rational(2));
  CHECK(evaluate(exp, 3, tables) == Rational(2));
}

TEST_CASE("evaluate of the unit family is constant 1") {
  SieveTables tables(30);
  const auto exp = expansion_coeffs(dirichlet_identity<Rational>(20), 20);
  for (std::int64_t n = 1; n <= 20; ++n) {
    CHECK(evaluate(exp, n, tables) == Rational(1));
  }
}

TEST_CASE("exact reconstruction against the divisor-sum oracle") {
  // evaluate(expansion_coeffs(f', N), n) = sum_{d|n, d<=N} f'(d), exactly.
  SieveTables tables(50);
  std::mt19937 rng(14);
  for (int trial = 0; trial < 25; ++trial) {
    const std::int64_t N = 1 + static_cast<std::int64_t>(rng() % 50);
    const auto fprime = testutil::random_rational_table(rng, N);
    const auto exp = expansion_coeffs(fprime, N);
    for (std::int64_t n = 1; n <= N; ++n) {
      CHECK(evaluate(exp, n, tables) == testutil::divisor_sum_at(fprime, n));
    }
  }
}

TEST_CASE("float expansion tracks the exact one at N = 10^4") {
  const std::int64_t N = 10'000;
  SieveTables tables(N);
  std::mt19937 rng(15);
  ArithTable<Rational> exact(N, "mixed");
  ArithTable<double> approx(N, "mixed");
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 6);
  for (std::int64_t d = 1; d <= N; ++d) {
    const int p = num(rng), q = den(rng);
    exact.at(d) = make_ratio(p, q);
    approx.at(d) = static_cast<double>(p) / q;
  }
  const auto exact_exp = expansion_coeffs(exact, N);
  const auto float_exp = expansion_coeffs(approx, N);
  double worst = 0.0;
  for (std::int64_t r = 1; r <= N; ++r) {
    const double e = to_double(exact_exp.at(r));
    const double f = float_exp.at(r);
    const double scale = std::max(1.0, std::abs(e));
    worst = std::max(worst, std::abs(e - f) / scale);
  }
  CHECK(worst <= 1e-9);

  // reconstruction agreement at sampled n
  for (std::int64_t n : {1, 2, 17, 100, 4096, 9999, 10000}) {
    const double e = to_double(evaluate(exact_exp, n, tables));
    const double f = evaluate(float_exp, n, tables);
    CHECK(std::abs(e - f) <= 1e-9 * std::max(1.0, std::abs(e)));
  }
}

TEST_CASE("expansion_coeffs validates the support precondition") {
  const auto fprime = ones_table<Rational>(10);
  CHECK_THROWS_AS(expansion_coeffs(fprime, 11), std::invalid_argument);
}

TEST_CASE("built-in families materialize their f'") {
  SieveTables tables(100);
  SUBCASE("power:1 is exactly 1/d") {
    const auto spec = parse_family("power:1");
    const auto exact = make_fprime<Rational>(spec, 50, tables);
    for (std::int64_t d = 1; d <= 50; ++d) {
      CHECK(exact.at(d) == make_ratio(1, Integer(d)));
    }
    const auto approx = make_fprime<double>(spec, 50, tables);
    for (std::int64_t d = 1; d <= 50; ++d) {
      CHECK(approx.at(d) == doctest::Approx(1.0 / d).epsilon(1e-14));
    }
  }
  SUBCASE("power:0.5 refuses the exact backend") {
    const auto spec = parse_family("power:0.5");
    CHECK_THROWS_AS(make_fprime<Rational>(spec, 10, tables),
                    std::invalid_argument);
    const auto approx = make_fprime<double>(spec, 10, tables);
    CHECK(approx.at(4) == doctest::Approx(0.5));
  }
  SUBCASE("log:3 is float-only with the 1/(1 + ln^3 d) regularization") {
    const auto spec = parse_family("log:3");
    CHECK_THROWS_AS(make_fprime<Rational>(spec, 10, tables),
                    std::invalid_argument);
    const auto approx = make_fprime<double>(spec, 10, tables);
    CHECK(approx.at(1) == doctest::Approx(1.0));  // ln 1 = 0
    const double l2 = std::log(2.0);
    CHECK(approx.at(2) == doctest::Approx(1.0 / (1.0 + l2 * l2 * l2)));
  }
  SUBCASE("family grammar errors") {
    CHECK_THROWS_AS(parse_family("nope"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("power"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("power:abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("unit:3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("custom:"), std::invalid_argument);
    CHECK(parse_family("log:2.5").param == doctest::Approx(2.5));
  }
}
