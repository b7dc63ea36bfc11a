#pragma once

// User-supplied coefficient files.
//
// Format: UTF-8 CSV. First line is the kind header, `fprime` or `fhat`;
// every following line is `index,value`. Unlisted indices are zero. Values
// may be integers, decimals, or `p/q` rationals (the float backend parses
// all three through strtod-compatible forms; `p/q` is divided out).

#include <cstdint>
#include <string>
#include <vector>

#include "ramex/numeric.hpp"

namespace ramex {

enum class CoefficientKind { fprime, fhat };

template <typename T>
struct CustomCoefficients {
  CoefficientKind kind = CoefficientKind::fprime;
  std::int64_t support = 0;
  std::vector<std::pair<std::int64_t, T>> entries;  // unique indices, ascending
};

namespace detail {
// Parsed but untyped file contents; values kept as text so each backend can
// convert exactly.
struct RawCustomFile {
  CoefficientKind kind;
  std::vector<std::pair<std::int64_t, std::string>> entries;
};
// Reads and validates structure: header, index uniqueness, index range.
// Throws IngestError with the offending line number.
RawCustomFile read_custom_file(const std::string& path, std::int64_t support);

double convert_value(const std::string& text, double);
Rational convert_value(const std::string& text, const Rational&);
}  // namespace detail

// Loads and validates a coefficient file against a support bound.
// Throws IngestError naming the line on duplicate indices, indices outside
// [1, support], or non-numeric values.
template <typename T>
CustomCoefficients<T> load_custom(const std::string& path,
                                  std::int64_t support) {
  const auto raw = detail::read_custom_file(path, support);
  CustomCoefficients<T> out;
  out.kind = raw.kind;
  out.support = support;
  out.entries.reserve(raw.entries.size());
  for (const auto& [index, text] : raw.entries) {
    out.entries.emplace_back(index, detail::convert_value(text, T{}));
  }
  return out;
}

}  // namespace ramex
