#pragma once

// Shared test helpers: seeded random tables and the independent brute-force
// oracles the library results are checked against. Every oracle here works
// by per-n trial division, deliberately avoiding the multiples-iteration
// code paths used inside the library.

#include <cstdint>
#include <random>
#include <string>

#include "ramex/arith_table.hpp"
#include "ramex/numeric.hpp"

namespace ramex::testutil {

// Random exact table with numerators in [-9, 9] and denominators in [1, 6].
inline ArithTable<Rational> random_rational_table(std::mt19937& rng,
                                                  std::int64_t n_max,
                                                  std::string label = "rand") {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 6);
  ArithTable<Rational> t(n_max, std::move(label));
  for (std::int64_t n = 1; n <= n_max; ++n) {
    t.at(n) = make_ratio(Integer(num(rng)), Integer(den(rng)));
  }
  return t;
}

inline ArithTable<double> random_double_table(std::mt19937& rng,
                                              std::int64_t n_max,
                                              std::string label = "rand") {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  ArithTable<double> t(n_max, std::move(label));
  for (std::int64_t n = 1; n <= n_max; ++n) t.at(n) = dist(rng);
  return t;
}

// Oracle: f(n) = sum_{d|n, d<=extent} fprime(d), by trial division.
template <typename T>
T divisor_sum_at(const ArithTable<T>& fprime, std::int64_t n) {
  T sum{};
  for (std::int64_t d = 1; d <= n && d <= fprime.n_max(); ++d) {
    if (n % d == 0) sum += fprime.at(d);
  }
  return sum;
}

// Oracle: sum_{n<=N} f(n) g(n+h) with f, g expanded by trial division on
// every n. Quadratic; small N only.
template <typename T>
T shifted_convolution_oracle(const ArithTable<T>& fprime,
                             const ArithTable<T>& gprime, std::int64_t N,
                             std::int64_t h) {
  T total{};
  for (std::int64_t n = 1; n <= N; ++n) {
    total += divisor_sum_at(fprime, n) * divisor_sum_at(gprime, n + h);
  }
  return total;
}

// Oracle: fhat(r) = sum_{d<=support, r|d} fprime(d)/d by scanning all d.
template <typename T>
T expansion_coeff_oracle(const ArithTable<T>& fprime, std::int64_t support,
                         std::int64_t r) {
  T sum{};
  for (std::int64_t d = 1; d <= support; ++d) {
    if (d % r == 0) sum += fprime.at(d) / T(d);
  }
  return sum;
}

}  // namespace ramex::testutil
