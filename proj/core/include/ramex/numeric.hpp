#pragma once

// Numeric substrate shared by every module: the exact rational backend, the
// compensated float accumulator used for sweep-scale sums, and the fixed
// rendering rules for serialized output.
//
// All identity checks (Mobius inversion round trips, finite-expansion
// reconstruction, the singular-series rearrangement) run on Rational and are
// asserted to exact equality. Large-N sweeps run on double; every long
// reduction goes through KahanSum so the measured error terms are not
// polluted by accumulation noise.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <string_view>

namespace ramex {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Kahan compensated summation.
struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  double value() const { return sum; }
};

// Accumulator<T>: the backend-appropriate reduction. Rational sums are exact;
// double sums are compensated.
template <typename T>
struct Accumulator {
  T total{};
  void add(const T& x) { total += x; }
  const T& value() const { return total; }
};

template <>
struct Accumulator<double> {
  KahanSum k;
  void add(double x) { k.add(x); }
  double value() const { return k.value(); }
};

inline double to_double(double x) { return x; }
inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline Rational make_ratio(Integer num, Integer den) {
  if (den == 0) throw std::domain_error("make_ratio: zero denominator");
  Rational r(std::move(num));
  r /= Rational(std::move(den));
  return r;
}

// "%.12g" rendering used for every floating-point number that reaches CSV or
// JSON output. Rationals render as "p/q" (or "p" when integral).
std::string format_sig12(double x);
std::string to_display(double x);
std::string to_display(const Rational& q);

// Parses "p/q", integers, and plain decimals ("0.25", "-3.5e2") into an exact
// rational. Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

// strtod with full-string validation. Throws std::invalid_argument.
double parse_double(std::string_view text);

}  // namespace ramex
