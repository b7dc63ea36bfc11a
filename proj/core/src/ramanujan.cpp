#include "ramex/ramanujan.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ramex/errors.hpp"

namespace ramex {

std::int64_t RamanujanRow::at(std::int64_t r) const {
  if (r < 1 || r > r_max) {
    throw std::out_of_range("RamanujanRow: r = " + std::to_string(r) +
                            " outside [1, " + std::to_string(r_max) + "]");
  }
  return values[static_cast<std::size_t>(r)];
}

std::int64_t ramanujan_sum(std::int64_t r, std::int64_t n,
                           const SieveTables& tables) {
  if (r < 1) {
    throw std::invalid_argument("ramanujan_sum: r must be >= 1, got " +
                                std::to_string(r));
  }
  if (r > tables.n_max()) {
    throw std::out_of_range("ramanujan_sum: r = " + std::to_string(r) +
                            " exceeds sieve extent " +
                            std::to_string(tables.n_max()));
  }
  if (n < 0) {
    throw std::invalid_argument("ramanujan_sum: n must be >= 0, got " +
                                std::to_string(n));
  }
  const std::int64_t g = (n == 0) ? r : std::gcd(r, n);
  std::int64_t sum = 0;
  for (std::int64_t d : tables.divisors(g)) {
    sum += static_cast<std::int64_t>(tables.mobius(r / d)) * d;
  }
  return sum;
}

std::int64_t ramanujan_sum_direct(std::int64_t r, std::int64_t n) {
  if (r < 1) {
    throw std::invalid_argument("ramanujan_sum_direct: r must be >= 1, got " +
                                std::to_string(r));
  }
  if (r > 1'000'000) {
    throw std::invalid_argument(
        "ramanujan_sum_direct: r = " + std::to_string(r) +
        " exceeds the O(r) summation guard (10^6)");
  }
  if (n < 0) {
    throw std::invalid_argument("ramanujan_sum_direct: n must be >= 0");
  }
  const double step = 2.0 * std::numbers::pi * static_cast<double>(n) /
                      static_cast<double>(r);
  KahanSum real, imag;
  for (std::int64_t a = 1; a <= r; ++a) {
    if (std::gcd(a, r) != 1) continue;
    const double angle = step * static_cast<double>(a);
    real.add(std::cos(angle));
    imag.add(std::sin(angle));
  }
  constexpr double kTol = 1e-6;
  if (std::abs(imag.value()) > kTol) {
    throw OracleToleranceError(
        "ramanujan_sum_direct(r=" + std::to_string(r) + ", n=" +
        std::to_string(n) + "): imaginary part " +
        format_sig12(imag.value()) + " exceeds tolerance");
  }
  const double rounded = std::nearbyint(real.value());
  if (std::abs(real.value() - rounded) > kTol) {
    throw OracleToleranceError(
        "ramanujan_sum_direct(r=" + std::to_string(r) + ", n=" +
        std::to_string(n) + "): real part " + format_sig12(real.value()) +
        " is not within tolerance of an integer");
  }
  return static_cast<std::int64_t>(rounded);
}

Rational lemma1_indicator(std::int64_t d, std::int64_t n,
                          const SieveTables& tables) {
  if (d < 1) {
    throw std::invalid_argument("lemma1_indicator: d must be >= 1, got " +
                                std::to_string(d));
  }
  if (d > tables.n_max()) {
    throw std::out_of_range("lemma1_indicator: d = " + std::to_string(d) +
                            " exceeds sieve extent " +
                            std::to_string(tables.n_max()));
  }
  Integer sum = 0;
  for (std::int64_t r : tables.divisors(d)) {
    sum += ramanujan_sum(r, n, tables);
  }
  return make_ratio(std::move(sum), Integer(d));
}

RamanujanRow cr_row(std::int64_t h, std::int64_t r_max,
                    const SieveTables& tables) {
  if (h < 0) {
    throw std::invalid_argument("cr_row: h must be >= 0, got " +
                                std::to_string(h));
  }
  if (r_max < 1 || r_max > tables.n_max()) {
    throw std::out_of_range("cr_row: r_max = " + std::to_string(r_max) +
                            " outside [1, " + std::to_string(tables.n_max()) +
                            "]");
  }
  RamanujanRow row;
  row.shift = h;
  row.r_max = r_max;
  row.values.assign(static_cast<std::size_t>(r_max) + 1, 0);

  // Divisors of the shift; for h = 0 every l divides, so c_r(0) picks up
  // sum_{l|r} l mu(r/l) = phi(r).
  std::vector<std::int64_t> shift_divisors;
  if (h == 0) {
    shift_divisors.resize(static_cast<std::size_t>(r_max));
    for (std::int64_t l = 1; l <= r_max; ++l) {
      shift_divisors[static_cast<std::size_t>(l - 1)] = l;
    }
  } else {
    shift_divisors = tables.divisors(h);
  }

  for (std::int64_t l : shift_divisors) {
    if (l > r_max) break;  // divisor lists are ascending
    for (std::int64_t r = l; r <= r_max; r += l) {
      const int mu = tables.mobius(r / l);
      if (mu != 0) row.values[static_cast<std::size_t>(r)] += mu * l;
    }
  }
  return row;
}

}  // namespace ramex
