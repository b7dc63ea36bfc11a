#pragma once

// Ramanujan sums c_r(n) and the identities built directly on them.
//
// The working formula is the Mobius-divisor form
//
//     c_r(n) = sum_{d | gcd(r, n)} mu(r/d) d,
//
// with the convention gcd(r, 0) = r, so c_r(0) = sum_{d|r} mu(r/d) d = phi(r).
// The definition as a sum of n-th powers of primitive r-th roots of unity is
// kept alongside as an independent numeric oracle (ramanujan_sum_direct) so
// the two routes can be checked against each other.
//
// Divisibility-indicator identity: (1/d) sum_{r|d} c_r(n) = [d | n].

#include <cstdint>
#include <vector>

#include "ramex/numeric.hpp"
#include "ramex/sieve.hpp"

namespace ramex {

// The row c_r(h), r = 1..r_max, for a fixed shift h.
struct RamanujanRow {
  std::int64_t shift = 0;  // h
  std::int64_t r_max = 0;
  std::vector<std::int64_t> values;  // values[r] = c_r(h); slot 0 unused

  std::int64_t at(std::int64_t r) const;
};

// c_r(n) by the Mobius-divisor formula, exact in 64-bit integers.
// Requires 1 <= r <= tables.n_max() and n >= 0.
std::int64_t ramanujan_sum(std::int64_t r, std::int64_t n,
                           const SieveTables& tables);

// The root-of-unity oracle: sums cos(2 pi a n / r) over a in (Z/rZ)* and
// rounds to the nearest integer. Asserts that the sine sum vanishes and the
// cosine sum is within 1e-6 of an integer; a violation throws
// OracleToleranceError (a bug signal, not an input error). Guarded to
// r <= 10^6 to keep the O(r) summation honest.
std::int64_t ramanujan_sum_direct(std::int64_t r, std::int64_t n);

// (1/d) sum_{r|d} c_r(n) as an exact rational; equals 1 if d | n, else 0.
Rational lemma1_indicator(std::int64_t d, std::int64_t n,
                          const SieveTables& tables);

// Assembles c_r(h) for all r <= r_max at once via
// c_r(h) = sum_{l | gcd(h, r)} l mu(r/l): iterate the divisors l of h and
// walk their multiples, instead of a per-r gcd computation. For h = 0 every
// l qualifies and the row degenerates to the totient table.
RamanujanRow cr_row(std::int64_t h, std::int64_t r_max,
                    const SieveTables& tables);

}  // namespace ramex
