#include "ramex/sieve.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace ramex {

SieveTables::SieveTables(std::int64_t n_max) : n_max_(n_max) {
  if (n_max < 1) {
    throw std::invalid_argument("SieveTables: n_max must be >= 1, got " +
                                std::to_string(n_max));
  }
  if (n_max > std::numeric_limits<std::int32_t>::max()) {
    throw std::invalid_argument("SieveTables: n_max exceeds 32-bit table limit");
  }
  const auto size = static_cast<std::size_t>(n_max) + 1;
  mobius_.assign(size, 0);
  spf_.assign(size, 0);
  divisor_count_.assign(size, 0);
  mobius_[1] = 1;

  // Linear sieve: each composite is crossed off exactly once, by its
  // smallest prime factor.
  std::vector<std::int32_t> primes;
  for (std::int64_t i = 2; i <= n_max; ++i) {
    if (spf_[static_cast<std::size_t>(i)] == 0) {
      spf_[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(i);
      mobius_[static_cast<std::size_t>(i)] = -1;
      primes.push_back(static_cast<std::int32_t>(i));
    }
    const std::int32_t spf_i = spf_[static_cast<std::size_t>(i)];
    for (std::int32_t p : primes) {
      if (p > spf_i || p > n_max / i) break;
      const auto ip = static_cast<std::size_t>(i * p);
      spf_[ip] = p;
      mobius_[ip] = (p == spf_i)
                        ? std::int8_t{0}
                        : static_cast<std::int8_t>(-mobius_[static_cast<std::size_t>(i)]);
    }
  }

  // d(n) by iterating multiples of each d: harmonic-series total cost.
  for (std::int64_t d = 1; d <= n_max; ++d) {
    for (std::int64_t m = d; m <= n_max; m += d) {
      ++divisor_count_[static_cast<std::size_t>(m)];
    }
  }
}

void SieveTables::check_range(std::int64_t n, std::int64_t lo) const {
  if (n < lo || n > n_max_) {
    throw std::out_of_range("SieveTables: n = " + std::to_string(n) +
                            " outside [" + std::to_string(lo) + ", " +
                            std::to_string(n_max_) + "]");
  }
}

std::vector<PrimePower> SieveTables::factorize(std::int64_t n) const {
  check_range(n, 1);
  std::vector<PrimePower> factors;
  while (n > 1) {
    const auto p = static_cast<std::int64_t>(spf_[static_cast<std::size_t>(n)]);
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    factors.push_back({p, e});
  }
  return factors;
}

std::vector<std::int64_t> SieveTables::divisors(std::int64_t n) const {
  const auto factors = factorize(n);
  std::vector<std::int64_t> divs{1};
  for (const auto& [p, e] : factors) {
    const std::size_t base = divs.size();
    std::int64_t pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::int64_t SieveTables::totient(std::int64_t n) const {
  std::int64_t phi = 1;
  for (const auto& [p, e] : factorize(n)) {
    std::int64_t pk = 1;
    for (int k = 1; k < e; ++k) pk *= p;
    phi *= pk * (p - 1);
  }
  return phi;
}

Rational sigma_minus_one(std::int64_t h) {
  if (h < 1) {
    throw std::invalid_argument("sigma_minus_one: h must be >= 1, got " +
                                std::to_string(h));
  }
  // sigma_{-1}(h) = sigma_1(h)/h; enumerate divisors by trial division so the
  // function needs no sieve tables.
  Integer divisor_sum = 0;
  for (std::int64_t d = 1; d * d <= h; ++d) {
    if (h % d != 0) continue;
    divisor_sum += d;
    if (d != h / d) divisor_sum += h / d;
  }
  return make_ratio(divisor_sum, Integer(h));
}

}  // namespace ramex
