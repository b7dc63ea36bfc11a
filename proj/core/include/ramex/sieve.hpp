#pragma once

// Sieve tables: Mobius values, smallest prime factors, divisor counts, and
// the per-n factorization/divisor-enumeration support everything else is
// built on. Construction is a single linear sieve pass plus an
// O(n_max log n_max) divisor-count pass; the tables are immutable afterwards
// and safe to share across threads.
//
// All tables are 1-indexed: n = 0 is always a range error, never an alias
// for n = 1.

#include <cstdint>
#include <vector>

#include "ramex/numeric.hpp"

namespace ramex {

struct PrimePower {
  std::int64_t prime;
  int exponent;
};

class SieveTables {
 public:
  // Throws std::invalid_argument for n_max < 1.
  explicit SieveTables(std::int64_t n_max);

  std::int64_t n_max() const noexcept { return n_max_; }

  // mu(n), n in [1, n_max].
  int mobius(std::int64_t n) const {
    check_range(n, 1);
    return mobius_[static_cast<std::size_t>(n)];
  }

  // Smallest prime factor of n, n in [2, n_max].
  std::int64_t smallest_prime_factor(std::int64_t n) const {
    check_range(n, 2);
    return spf_[static_cast<std::size_t>(n)];
  }

  // d(n), the number of divisors of n.
  std::int64_t divisor_count(std::int64_t n) const {
    check_range(n, 1);
    return divisor_count_[static_cast<std::size_t>(n)];
  }

  // Prime factorization of n via repeated smallest-prime-factor lookups.
  std::vector<PrimePower> factorize(std::int64_t n) const;

  // Ascending list of all divisors of n.
  std::vector<std::int64_t> divisors(std::int64_t n) const;

  // Euler totient, derived from the factorization on demand.
  std::int64_t totient(std::int64_t n) const;

 private:
  void check_range(std::int64_t n, std::int64_t lo) const;

  std::int64_t n_max_;
  std::vector<std::int8_t> mobius_;         // mobius_[n] = mu(n)
  std::vector<std::int32_t> spf_;           // spf_[n] = least prime factor
  std::vector<std::int32_t> divisor_count_; // divisor_count_[n] = d(n)
};

// sigma_{-1}(h) = sum of reciprocals of the divisors of h, exact.
// Throws std::invalid_argument for h < 1.
Rational sigma_minus_one(std::int64_t h);

}  // namespace ramex
