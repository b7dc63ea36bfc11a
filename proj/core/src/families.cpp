#include "ramex/families.hpp"

#include <cmath>
#include <stdexcept>

namespace ramex {

std::string FamilySpec::label() const {
  switch (kind) {
    case FamilyKind::unit:
      return "unit";
    case FamilyKind::divisor:
      return "divisor";
    case FamilyKind::power_decay:
      return "power:" + format_sig12(param);
    case FamilyKind::log_decay:
      return "log:" + format_sig12(param);
    case FamilyKind::custom:
      return "custom:" + path;
  }
  return "?";
}

bool FamilySpec::exact_representable() const {
  switch (kind) {
    case FamilyKind::unit:
    case FamilyKind::divisor:
    case FamilyKind::custom:
      return true;
    case FamilyKind::power_decay:
      return param >= 0.0 && param == std::floor(param);
    case FamilyKind::log_decay:
      return false;
  }
  return false;
}

FamilySpec parse_family(std::string_view text) {
  FamilySpec spec;
  std::string_view name = text;
  std::string_view arg;
  if (const auto colon = text.find(':'); colon != std::string_view::npos) {
    name = text.substr(0, colon);
    arg = text.substr(colon + 1);
  }

  auto require_param = [&](FamilyKind kind) {
    if (arg.empty()) {
      throw std::invalid_argument("family '" + std::string(text) +
                                  "' requires a parameter, e.g. '" +
                                  std::string(name) + ":0.5'");
    }
    spec.kind = kind;
    spec.param = parse_double(arg);
  };

  if (name == "unit") {
    spec.kind = FamilyKind::unit;
  } else if (name == "divisor") {
    spec.kind = FamilyKind::divisor;
  } else if (name == "power") {
    require_param(FamilyKind::power_decay);
    if (spec.param <= 0.0) {
      throw std::invalid_argument("power family needs delta > 0, got " +
                                  std::string(arg));
    }
  } else if (name == "log") {
    require_param(FamilyKind::log_decay);
    if (spec.param <= 0.0) {
      throw std::invalid_argument("log family needs beta > 0, got " +
                                  std::string(arg));
    }
  } else if (name == "custom") {
    if (arg.empty()) {
      throw std::invalid_argument("custom family needs a file path: custom:<path>");
    }
    spec.kind = FamilyKind::custom;
    spec.path = std::string(arg);
  } else {
    throw std::invalid_argument("unknown family '" + std::string(text) +
                                "' (expected unit, divisor, power:<delta>, "
                                "log:<beta>, custom:<path>)");
  }
  if (!arg.empty() &&
      (spec.kind == FamilyKind::unit || spec.kind == FamilyKind::divisor)) {
    throw std::invalid_argument("family '" + std::string(name) +
                                "' takes no parameter");
  }
  return spec;
}

namespace detail {

double family_value(const FamilySpec& spec, std::int64_t d, double) {
  switch (spec.kind) {
    case FamilyKind::power_decay:
      return std::pow(static_cast<double>(d), -spec.param);
    case FamilyKind::log_decay: {
      const double l = std::log(static_cast<double>(d));
      return 1.0 / (1.0 + std::pow(l, spec.param));
    }
    default:
      throw std::logic_error("family_value: not a parameterized family");
  }
}

Rational family_value(const FamilySpec& spec, std::int64_t d,
                      const Rational&) {
  if (spec.kind == FamilyKind::power_decay && spec.exact_representable()) {
    const auto k = static_cast<long>(spec.param);
    Integer dk = 1;
    for (long i = 0; i < k; ++i) dk *= d;
    return make_ratio(Integer(1), std::move(dk));
  }
  throw std::invalid_argument(
      "family '" + spec.label() +
      "' is not exactly representable; use the float backend");
}

}  // namespace detail

}  // namespace ramex
