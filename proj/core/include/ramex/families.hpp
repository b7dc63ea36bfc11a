#pragma once

// Built-in function families, specified at the f' level so they hit the
// decay-hypothesis classes exactly:
//
//   unit        f'(d) = [d = 1]           f(n) = 1
//   divisor     f'(d) = 1                 f(n) = d(n)
//   power:delta f'(d) = d^(-delta)
//   log:beta    f'(d) = 1/(1 + (ln d)^beta)
//   custom:path f' (or fhat, dualized) from a coefficient file
//
// Grammar: name[:param], e.g. "power:0.5", "log:3", "custom:coeffs.csv".
//
// The exact backend carries unit, divisor, power with integer delta, and
// custom files; log families and fractional powers are irrational by nature
// and only exist on the float backend.

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>

#include "ramex/arith_table.hpp"
#include "ramex/custom.hpp"
#include "ramex/expansion.hpp"
#include "ramex/numeric.hpp"
#include "ramex/sieve.hpp"

namespace ramex {

enum class FamilyKind { unit, divisor, power_decay, log_decay, custom };

struct FamilySpec {
  FamilyKind kind = FamilyKind::unit;
  double param = 0.0;       // delta for power, beta for log
  std::string path;         // custom coefficient file
  std::string label() const;

  // True when make_fprime<Rational> can represent the family exactly.
  bool exact_representable() const;
};

// Parses "unit", "divisor", "power:0.5", "log:3", "custom:<path>".
// Throws std::invalid_argument naming the offending family text.
FamilySpec parse_family(std::string_view text);

namespace detail {
double family_value(const FamilySpec& spec, std::int64_t d, double);
Rational family_value(const FamilySpec& spec, std::int64_t d, const Rational&);
}  // namespace detail

// Materializes the family's f' on 1..n_max. The sieve is only consulted for
// custom fhat files, which are dualized back to f' over their own support.
template <typename T>
ArithTable<T> make_fprime(const FamilySpec& spec, std::int64_t n_max,
                          const SieveTables& tables) {
  if (spec.kind == FamilyKind::custom) {
    const auto coeffs = load_custom<T>(spec.path, n_max);
    if (coeffs.kind == CoefficientKind::fprime) {
      ArithTable<T> fprime(n_max, spec.label());
      for (const auto& [index, value] : coeffs.entries) {
        fprime.at(index) = value;
      }
      return fprime;
    }
    // fhat file: rebuild f' by dual Mobius inversion over the file's support.
    FiniteExpansion<T> exp(n_max, spec.label());
    for (const auto& [index, value] : coeffs.entries) exp.at(index) = value;
    ArithTable<T> fprime = dual_invert(exp, tables);
    fprime.set_label(spec.label());
    return fprime;
  }

  ArithTable<T> fprime(n_max, spec.label());
  switch (spec.kind) {
    case FamilyKind::unit:
      fprime.at(1) = T(1);
      break;
    case FamilyKind::divisor:
      for (std::int64_t d = 1; d <= n_max; ++d) fprime.at(d) = T(1);
      break;
    case FamilyKind::power_decay:
    case FamilyKind::log_decay:
      for (std::int64_t d = 1; d <= n_max; ++d) {
        fprime.at(d) = detail::family_value(spec, d, T{});
      }
      break;
    case FamilyKind::custom:
      break;  // handled above
  }
  return fprime;
}

}  // namespace ramex
