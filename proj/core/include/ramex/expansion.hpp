#pragma once

// Finite Ramanujan expansions.
//
// Fix a support bound S (S = N for f, S = N+h for the shifted factor g) and
// force the Mobius transform f' to vanish beyond S. Then
//
//     f(n) = sum_{d|n, d<=S} f'(d)            for all n <= S,
//     fhat(r) = sum_{r|d, d<=S} f'(d) / d     (coefficients, r <= S),
//     f(n) = sum_{r<=S} fhat(r) c_r(n)        exactly for n <= S,
//
// and the coefficients invert back through the dual Mobius inversion
//
//     f'(r) = r sum_{r|d, d<=S} mu(d/r) fhat(d).
//
// Coefficients with r > S are identically zero (the defining sum is empty),
// so the expansion never materializes them. The reconstruction identity is
// exact on the Rational backend and is this module's keystone test.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ramex/arith_table.hpp"
#include "ramex/numeric.hpp"
#include "ramex/ramanujan.hpp"
#include "ramex/sieve.hpp"

namespace ramex {

template <typename T>
class FiniteExpansion {
 public:
  FiniteExpansion(std::int64_t support, std::string source_label)
      : support_(support), source_label_(std::move(source_label)) {
    if (support < 1) {
      throw std::invalid_argument("FiniteExpansion: support must be >= 1, got " +
                                  std::to_string(support));
    }
    coeffs_.assign(static_cast<std::size_t>(support) + 1, T{});
  }

  std::int64_t support() const noexcept { return support_; }
  const std::string& source_label() const noexcept { return source_label_; }

  // fhat(r), defined for exactly 1 <= r <= support.
  const T& at(std::int64_t r) const {
    check_range(r);
    return coeffs_[static_cast<std::size_t>(r)];
  }
  T& at(std::int64_t r) {
    check_range(r);
    return coeffs_[static_cast<std::size_t>(r)];
  }

  // fhat(r) extended by the empty-sum convention: zero beyond the support.
  T at_or_zero(std::int64_t r) const {
    if (r > support_) return T{};
    check_range(r);
    return coeffs_[static_cast<std::size_t>(r)];
  }

 private:
  void check_range(std::int64_t r) const {
    if (r < 1 || r > support_) {
      throw std::out_of_range("FiniteExpansion '" + source_label_ +
                              "': r = " + std::to_string(r) + " outside [1, " +
                              std::to_string(support_) + "]");
    }
  }

  std::int64_t support_;
  std::string source_label_;
  std::vector<T> coeffs_;  // coeffs_[r] = fhat(r); slot 0 unused
};

// Restricts f' to d <= bound: values above are discarded, and if bound
// exceeds the table the tail is zero (f' vanishes beyond its extent).
template <typename T>
ArithTable<T> truncate_support(const ArithTable<T>& fprime,
                               std::int64_t bound) {
  ArithTable<T> result(bound, fprime.label());
  const std::int64_t copy_to = std::min(bound, fprime.n_max());
  for (std::int64_t d = 1; d <= copy_to; ++d) result.at(d) = fprime.at(d);
  return result;
}

// fhat(r) = sum_{r|d, d<=support} f'(d)/d, for r = 1..support. Iterates r and
// then the multiples of r, so the total cost is O(support log support).
template <typename T>
FiniteExpansion<T> expansion_coeffs(const ArithTable<T>& fprime,
                                    std::int64_t support) {
  if (fprime.n_max() < support) {
    throw std::invalid_argument(
        "expansion_coeffs: table extent " + std::to_string(fprime.n_max()) +
        " is below the requested support " + std::to_string(support));
  }
  FiniteExpansion<T> exp(support, fprime.label());
  for (std::int64_t r = 1; r <= support; ++r) {
    Accumulator<T> acc;
    for (std::int64_t d = r; d <= support; d += r) {
      acc.add(fprime.at(d) / T(d));
    }
    exp.at(r) = acc.value();
  }
  return exp;
}

// Dual Mobius inversion: f'(r) = r sum_{r|d, d<=support} mu(d/r) fhat(d).
// Exact round-trip with expansion_coeffs on the Rational backend.
template <typename T>
ArithTable<T> dual_invert(const FiniteExpansion<T>& exp,
                          const SieveTables& tables) {
  const std::int64_t support = exp.support();
  if (support > tables.n_max()) {
    throw std::invalid_argument("dual_invert: support " +
                                std::to_string(support) +
                                " exceeds sieve extent " +
                                std::to_string(tables.n_max()));
  }
  ArithTable<T> fprime(support, exp.source_label());
  for (std::int64_t r = 1; r <= support; ++r) {
    Accumulator<T> acc;
    for (std::int64_t d = r; d <= support; d += r) {
      const int mu = tables.mobius(d / r);
      if (mu == 1) {
        acc.add(exp.at(d));
      } else if (mu == -1) {
        acc.add(-exp.at(d));
      }
    }
    fprime.at(r) = acc.value() * T(r);
  }
  return fprime;
}

// f(n) = sum_{r<=support} fhat(r) c_r(n). Exact for n <= support; defined for
// any n within the sieve extent.
template <typename T>
T evaluate(const FiniteExpansion<T>& exp, std::int64_t n,
           const SieveTables& tables) {
  if (n < 1) {
    throw std::invalid_argument("evaluate: n must be >= 1, got " +
                                std::to_string(n));
  }
  const RamanujanRow row = cr_row(n, exp.support(), tables);
  Accumulator<T> acc;
  for (std::int64_t r = 1; r <= exp.support(); ++r) {
    const std::int64_t c = row.values[static_cast<std::size_t>(r)];
    if (c != 0) acc.add(exp.at(r) * T(c));
  }
  return acc.value();
}

}  // namespace ramex
