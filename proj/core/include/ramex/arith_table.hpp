#pragma once

// ArithTable<T>: values of an arithmetical function on 1..n_max, plus the
// Dirichlet-convolution machinery on top of it.
//
// T is either Rational (exact backend) or double (float backend); the value
// kind is uniform over a table by construction. Access outside [1, n_max]
// throws, never silently reads zero. Library operations take tables by const
// reference and return fresh ones; nothing mutates a table after it has been
// handed out.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ramex/numeric.hpp"
#include "ramex/sieve.hpp"

namespace ramex {

template <typename T>
class ArithTable {
 public:
  ArithTable(std::int64_t n_max, std::string label, const T& fill = T{})
      : n_max_(n_max), label_(std::move(label)) {
    if (n_max < 1) {
      throw std::invalid_argument("ArithTable: n_max must be >= 1, got " +
                                  std::to_string(n_max));
    }
    values_.assign(static_cast<std::size_t>(n_max) + 1, fill);
  }

  std::int64_t n_max() const noexcept { return n_max_; }
  const std::string& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  const T& at(std::int64_t n) const {
    check_range(n);
    return values_[static_cast<std::size_t>(n)];
  }
  T& at(std::int64_t n) {
    check_range(n);
    return values_[static_cast<std::size_t>(n)];
  }

 private:
  void check_range(std::int64_t n) const {
    if (n < 1 || n > n_max_) {
      throw std::out_of_range("ArithTable '" + label_ + "': n = " +
                              std::to_string(n) + " outside [1, " +
                              std::to_string(n_max_) + "]");
    }
  }

  std::int64_t n_max_;
  std::string label_;
  std::vector<T> values_;  // values_[n] is the value at n; slot 0 unused
};

// The all-ones function (f' of the divisor family, and the Dirichlet inverse
// of the Mobius function).
template <typename T>
ArithTable<T> ones_table(std::int64_t n_max, std::string label = "1") {
  return ArithTable<T>(n_max, std::move(label), T(1));
}

// delta_1: 1 at n = 1, 0 elsewhere. The identity of Dirichlet convolution.
template <typename T>
ArithTable<T> dirichlet_identity(std::int64_t n_max,
                                 std::string label = "delta1") {
  ArithTable<T> t(n_max, std::move(label));
  t.at(1) = T(1);
  return t;
}

// mu as an ArithTable over the chosen backend.
template <typename T>
ArithTable<T> mobius_table(const SieveTables& tables, std::int64_t n_max) {
  if (n_max > tables.n_max()) {
    throw std::invalid_argument("mobius_table: n_max exceeds sieve extent");
  }
  ArithTable<T> t(n_max, "mu");
  for (std::int64_t n = 1; n <= n_max; ++n) t.at(n) = T(tables.mobius(n));
  return t;
}

// d(n) as an ArithTable.
template <typename T>
ArithTable<T> divisor_count_table(const SieveTables& tables,
                                  std::int64_t n_max) {
  if (n_max > tables.n_max()) {
    throw std::invalid_argument("divisor_count_table: n_max exceeds sieve extent");
  }
  ArithTable<T> t(n_max, "d");
  for (std::int64_t n = 1; n <= n_max; ++n) t.at(n) = T(tables.divisor_count(n));
  return t;
}

// (a*b)(n) = sum_{d|n} a(d) b(n/d), for every n <= n_max. Computed by
// iterating multiples of each d, so the total cost is O(n_max log n_max)
// instead of per-n divisor enumeration.
template <typename T>
ArithTable<T> dirichlet_convolve(const ArithTable<T>& a,
                                 const ArithTable<T>& b) {
  if (a.n_max() != b.n_max()) {
    throw std::invalid_argument("dirichlet_convolve: extents differ (" +
                                std::to_string(a.n_max()) + " vs " +
                                std::to_string(b.n_max()) + ")");
  }
  const std::int64_t n_max = a.n_max();
  ArithTable<T> result(n_max, a.label() + "*" + b.label());
  for (std::int64_t d = 1; d <= n_max; ++d) {
    const T& ad = a.at(d);
    if (ad == T{}) continue;
    for (std::int64_t m = d; m <= n_max; m += d) {
      result.at(m) += ad * b.at(m / d);
    }
  }
  return result;
}

// Mobius transform f' = f * mu: result(n) = sum_{d|n} mu(n/d) f(d).
// Round-trips with dirichlet_convolve(result, ones) == f.
template <typename T>
ArithTable<T> mobius_invert(const ArithTable<T>& f, const SieveTables& tables) {
  if (f.n_max() > tables.n_max()) {
    throw std::invalid_argument("mobius_invert: table extent " +
                                std::to_string(f.n_max()) +
                                " exceeds sieve extent " +
                                std::to_string(tables.n_max()));
  }
  const std::int64_t n_max = f.n_max();
  ArithTable<T> result(n_max, f.label() + "'");
  for (std::int64_t d = 1; d <= n_max; ++d) {
    const T& fd = f.at(d);
    if (fd == T{}) continue;
    for (std::int64_t m = d; m <= n_max; m += d) {
      const int mu = tables.mobius(m / d);
      if (mu == 1) {
        result.at(m) += fd;
      } else if (mu == -1) {
        result.at(m) -= fd;
      }
    }
  }
  return result;
}

}  // namespace ramex
