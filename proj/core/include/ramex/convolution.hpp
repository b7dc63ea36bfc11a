#pragma once

// Shifted convolution sums C_{f,g}(h) = sum_{n<=N} f(n) g(n+h), evaluated
// three independent ways:
//
//   brute_force       materialize f on 1..N and g on 1..N+h from the
//                     truncated Mobius transforms, then one linear pass;
//   double_expansion  substitute both finite Ramanujan expansions and sum
//                     sum_r sum_s fhat(r) ghat(s) sum_n c_r(n) c_s(n+h)
//                     with no approximation (cubic cost, size-guarded);
//   main_term         N sum_{r<=N} fhat(r) ghat(r) c_r(h), the asymptotic
//                     main term.
//
// brute_force == double_expansion is an exact identity (keystone test), and
// N * singular_series == main_term is the Mobius rearrangement
//
//   sum_{l|h} l sum_t mu(t) fhat(lt) ghat(lt)
//     = sum_r fhat(r) ghat(r) c_r(h).
//
// Error envelopes with implied constant 1:
//   power-delta:  N^(1-delta) (ln N)^2 + 1
//   log-beta:     N / (ln N)^(beta-2), beta > 2.
// Reports expose |error| / envelope; no single-N value is pass/fail, trend
// judgments live in the sweep layer.

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramex/arith_table.hpp"
#include "ramex/errors.hpp"
#include "ramex/expansion.hpp"
#include "ramex/numeric.hpp"
#include "ramex/ramanujan.hpp"
#include "ramex/sieve.hpp"

namespace ramex {

template <typename T>
struct ConvolutionProblem {
  ArithTable<T> fprime;      // truncated to support N
  ArithTable<T> gprime;      // truncated to support N + h
  std::int64_t N = 0;
  std::int64_t h = 0;        // h = 0 is accepted here; theorem reports gate it
  FiniteExpansion<T> f_hat;  // support N
  FiniteExpansion<T> g_hat;  // support N + h
};

// Builds a consistent problem: truncates the inputs to their supports and
// derives both coefficient vectors. The inputs may be any tables with
// n_max >= N (resp. >= N + h).
template <typename T>
ConvolutionProblem<T> make_problem(const ArithTable<T>& fprime,
                                   const ArithTable<T>& gprime,
                                   std::int64_t N, std::int64_t h) {
  if (N < 1) {
    throw std::invalid_argument("make_problem: N must be >= 1, got " +
                                std::to_string(N));
  }
  if (h < 0) {
    throw std::invalid_argument("make_problem: h must be >= 0, got " +
                                std::to_string(h));
  }
  if (fprime.n_max() < N) {
    throw std::invalid_argument("make_problem: fprime extent " +
                                std::to_string(fprime.n_max()) +
                                " is below N = " + std::to_string(N));
  }
  if (gprime.n_max() < N + h) {
    throw std::invalid_argument("make_problem: gprime extent " +
                                std::to_string(gprime.n_max()) +
                                " is below N + h = " + std::to_string(N + h));
  }
  ArithTable<T> fp = truncate_support(fprime, N);
  ArithTable<T> gp = truncate_support(gprime, N + h);
  FiniteExpansion<T> f_hat = expansion_coeffs(fp, N);
  FiniteExpansion<T> g_hat = expansion_coeffs(gp, N + h);
  return ConvolutionProblem<T>{std::move(fp), std::move(gp), N, h,
                               std::move(f_hat), std::move(g_hat)};
}

namespace detail {
// f(n) = sum_{d|n, d<=extent} fprime(d) materialized on 1..extent by
// iterating multiples of each d.
template <typename T>
std::vector<T> materialize(const ArithTable<T>& fprime, std::int64_t extent) {
  std::vector<T> f(static_cast<std::size_t>(extent) + 1, T{});
  for (std::int64_t d = 1; d <= extent; ++d) {
    const T& fd = fprime.at(d);
    if (fd == T{}) continue;
    for (std::int64_t m = d; m <= extent; m += d) {
      f[static_cast<std::size_t>(m)] += fd;
    }
  }
  return f;
}

// c_r(n) for all r <= r_max, n <= n_limit, assembled by iterating l, then
// multiples r of l, then multiples n of l. Total cost ~ (pi^2/6) r_max n_limit.
inline std::vector<std::vector<std::int64_t>> cr_matrix(
    std::int64_t r_max, std::int64_t n_limit, const SieveTables& tables) {
  std::vector<std::vector<std::int64_t>> c(
      static_cast<std::size_t>(r_max) + 1,
      std::vector<std::int64_t>(static_cast<std::size_t>(n_limit) + 1, 0));
  for (std::int64_t l = 1; l <= r_max; ++l) {
    for (std::int64_t r = l; r <= r_max; r += l) {
      const std::int64_t term =
          static_cast<std::int64_t>(tables.mobius(r / l)) * l;
      if (term == 0) continue;
      auto& row = c[static_cast<std::size_t>(r)];
      for (std::int64_t n = l; n <= n_limit; n += l) {
        row[static_cast<std::size_t>(n)] += term;
      }
    }
  }
  return c;
}
}  // namespace detail

// sum_{n<=N} f(n) g(n+h) with f, g rebuilt from the problem's truncated
// Mobius transforms. O((N+h) log(N+h)) total.
template <typename T>
T brute_force(const ConvolutionProblem<T>& p) {
  const std::vector<T> f = detail::materialize(p.fprime, p.N);
  const std::vector<T> g = detail::materialize(p.gprime, p.N + p.h);
  Accumulator<T> acc;
  for (std::int64_t n = 1; n <= p.N; ++n) {
    acc.add(f[static_cast<std::size_t>(n)] *
            g[static_cast<std::size_t>(n + p.h)]);
  }
  return acc.value();
}

// N sum_{r<=N} fhat(r) ghat(r) c_r(h). Coefficients beyond the support are
// zero, so the nominally infinite sum ends at N.
template <typename T>
T main_term(const ConvolutionProblem<T>& p, const SieveTables& tables) {
  const RamanujanRow row = cr_row(p.h, p.N, tables);
  Accumulator<T> acc;
  for (std::int64_t r = 1; r <= p.N; ++r) {
    const std::int64_t c = row.values[static_cast<std::size_t>(r)];
    if (c != 0) acc.add(p.f_hat.at(r) * p.g_hat.at(r) * T(c));
  }
  return acc.value() * T(p.N);
}

// The fully expanded double sum
//   sum_{r<=N} sum_{s<=N+h} fhat(r) ghat(s) sum_{n<=N} c_r(n) c_s(n+h),
// with the inner correlation computed in exact 64-bit integers. Equals
// brute_force identically. Guarded to N <= 300; beyond that use brute_force.
template <typename T>
T double_expansion(const ConvolutionProblem<T>& p, const SieveTables& tables) {
  constexpr std::int64_t kGuard = 300;
  if (p.N > kGuard) {
    throw SizeLimitError("double_expansion: N = " + std::to_string(p.N) +
                         " exceeds the cubic-cost guard (" +
                         std::to_string(kGuard) +
                         "); brute_force covers large N");
  }
  const std::int64_t M = p.N + p.h;
  const auto c = detail::cr_matrix(M, M, tables);

  Accumulator<T> acc;
  for (std::int64_t r = 1; r <= p.N; ++r) {
    const T& fr = p.f_hat.at(r);
    if (fr == T{}) continue;
    const auto& c_r = c[static_cast<std::size_t>(r)];
    for (std::int64_t s = 1; s <= M; ++s) {
      const T& gs = p.g_hat.at(s);
      if (gs == T{}) continue;
      const auto& c_s = c[static_cast<std::size_t>(s)];
      std::int64_t corr = 0;
      for (std::int64_t n = 1; n <= p.N; ++n) {
        corr += c_r[static_cast<std::size_t>(n)] *
                c_s[static_cast<std::size_t>(n + p.h)];
      }
      if (corr != 0) acc.add(fr * gs * T(corr));
    }
  }
  return acc.value();
}

// sum_{l|h} l sum_{t: lt<=N} mu(t) fhat(lt) ghat(lt); coefficients out of
// support count as zero. Multiplied by N this equals main_term exactly.
// For h = 0 every l >= 1 divides, reproducing c_r(0) = phi(r).
template <typename T>
T singular_series(const ConvolutionProblem<T>& p, const SieveTables& tables) {
  if (p.N > tables.n_max()) {
    throw std::invalid_argument("singular_series: N exceeds sieve extent");
  }
  std::vector<std::int64_t> shift_divisors;
  if (p.h == 0) {
    shift_divisors.resize(static_cast<std::size_t>(p.N));
    for (std::int64_t l = 1; l <= p.N; ++l) {
      shift_divisors[static_cast<std::size_t>(l - 1)] = l;
    }
  } else {
    shift_divisors = tables.divisors(p.h);
  }

  Accumulator<T> acc;
  for (std::int64_t l : shift_divisors) {
    if (l > p.N) break;
    Accumulator<T> inner;
    for (std::int64_t t = 1; l * t <= p.N; ++t) {
      const int mu = tables.mobius(t);
      if (mu == 0) continue;
      const T term = p.f_hat.at(l * t) * p.g_hat.at(l * t);
      if (mu == 1) {
        inner.add(term);
      } else {
        inner.add(-term);
      }
    }
    acc.add(inner.value() * T(l));
  }
  return acc.value();
}

enum class BoundKind { power_delta, log_beta };

// Theorem error envelope with implied constant 1:
//   power-delta: N^(1-delta) (ln N)^2 + 1     (delta > 0)
//   log-beta:    N / (ln N)^(beta-2)          (beta > 2)
// Callers divide measured |error| by this to estimate the implied constant.
double theorem_bound(BoundKind kind, double parameter, std::int64_t N);

std::string bound_kind_name(BoundKind kind);
std::optional<BoundKind> parse_bound_kind(std::string_view text);

template <typename T>
struct ConvolutionReport {
  std::int64_t N = 0;
  std::int64_t h = 0;
  std::string f_label;
  std::string g_label;
  T brute{};
  T main{};
  T error{};  // brute - main, identically
  std::optional<BoundKind> kind;
  double parameter = 0.0;
  double bound = 0.0;  // envelope at (N); meaningful only when kind is set
  double ratio = 0.0;  // |error| / bound
};

// Report without a theorem envelope (h = 0 diagnostics, bare conv runs).
template <typename T>
ConvolutionReport<T> report(const ConvolutionProblem<T>& p,
                            const SieveTables& tables) {
  ConvolutionReport<T> rep;
  rep.N = p.N;
  rep.h = p.h;
  rep.f_label = p.fprime.label();
  rep.g_label = p.gprime.label();
  rep.brute = brute_force(p);
  rep.main = main_term(p, tables);
  rep.error = rep.brute - rep.main;
  return rep;
}

// Report against a theorem envelope. Theorems require a positive shift, so
// h = 0 is rejected here even though the computation ops accept it.
template <typename T>
ConvolutionReport<T> report(const ConvolutionProblem<T>& p, BoundKind kind,
                            double parameter, const SieveTables& tables) {
  if (p.h < 1) {
    throw std::invalid_argument(
        "report: theorem envelopes require h >= 1 (got h = " +
        std::to_string(p.h) + ")");
  }
  ConvolutionReport<T> rep = report(p, tables);
  rep.kind = kind;
  rep.parameter = parameter;
  rep.bound = theorem_bound(kind, parameter, p.N);
  const double abs_err = std::abs(to_double(rep.error));
  rep.ratio = abs_err / rep.bound;
  return rep;
}

}  // namespace ramex
