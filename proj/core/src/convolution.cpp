#include "ramex/convolution.hpp"

#include <cmath>

namespace ramex {

double theorem_bound(BoundKind kind, double parameter, std::int64_t N) {
  if (N < 2) {
    throw std::invalid_argument("theorem_bound: N must be >= 2, got " +
                                std::to_string(N));
  }
  const double logN = std::log(static_cast<double>(N));
  switch (kind) {
    case BoundKind::power_delta:
      if (parameter <= 0.0) {
        throw std::invalid_argument(
            "theorem_bound: power-delta requires delta > 0, got " +
            format_sig12(parameter));
      }
      return std::pow(static_cast<double>(N), 1.0 - parameter) * logN * logN +
             1.0;
    case BoundKind::log_beta:
      if (parameter <= 2.0) {
        throw std::invalid_argument(
            "theorem_bound: log-beta requires beta > 2, got " +
            format_sig12(parameter));
      }
      return static_cast<double>(N) / std::pow(logN, parameter - 2.0);
  }
  throw std::logic_error("theorem_bound: unknown bound kind");
}

std::string bound_kind_name(BoundKind kind) {
  return kind == BoundKind::power_delta ? "power-delta" : "log-beta";
}

std::optional<BoundKind> parse_bound_kind(std::string_view text) {
  if (text == "power-delta") return BoundKind::power_delta;
  if (text == "log-beta") return BoundKind::log_beta;
  return std::nullopt;
}

}  // namespace ramex
