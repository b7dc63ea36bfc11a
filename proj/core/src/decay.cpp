#include "ramex/decay.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace ramex {

std::string decay_model_name(DecayModel model) {
  switch (model) {
    case DecayModel::power:
      return "power";
    case DecayModel::log:
      return "log";
    case DecayModel::fprime_log:
      return "fprime-log";
  }
  return "?";
}

std::optional<DecayModel> parse_decay_model(std::string_view text) {
  if (text == "power") return DecayModel::power;
  if (text == "log") return DecayModel::log;
  if (text == "fprime-log") return DecayModel::fprime_log;
  return std::nullopt;
}

LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("fit_line: size mismatch");
  }
  const std::size_t n = x.size();
  if (n < 2) {
    throw DegenerateFitError("fit_line: need at least 2 points, got " +
                             std::to_string(n));
  }
  KahanSum sx, sy;
  for (std::size_t i = 0; i < n; ++i) {
    sx.add(x[i]);
    sy.add(y[i]);
  }
  const double mx = sx.value() / static_cast<double>(n);
  const double my = sy.value() / static_cast<double>(n);
  KahanSum sxx, sxy;
  for (std::size_t i = 0; i < n; ++i) {
    sxx.add((x[i] - mx) * (x[i] - mx));
    sxy.add((x[i] - mx) * (y[i] - my));
  }
  if (sxx.value() == 0.0) {
    throw DegenerateFitError("fit_line: all abscissae coincide");
  }
  LinearFit fit;
  fit.slope = sxy.value() / sxx.value();
  fit.intercept = my - fit.slope * mx;
  return fit;
}

namespace {

std::vector<double> midranks(const std::vector<double>& v) {
  const std::size_t n = v.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && v[order[j + 1]] == v[order[i]]) ++j;
    const double rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("spearman: need two equal-length samples");
  }
  const std::vector<double> rx = midranks(x), ry = midranks(y);
  const std::size_t n = x.size();
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += rx[i];
    my += ry[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;  // constant ranks carry no trend
  return sxy / std::sqrt(sxx * syy);
}

DecayFit fit_decay_values(const std::vector<double>& abs_values,
                          DecayModel model) {
  const auto support = static_cast<std::int64_t>(abs_values.size()) - 1;
  // ln r > 1 is required for the log-weighted models.
  const std::int64_t first = (model == DecayModel::power) ? 1 : 3;

  std::vector<double> xs, ys;
  DecayFit fit;
  fit.model = model;
  fit.r_min = 0;
  for (std::int64_t r = first; r <= support; ++r) {
    const double a = abs_values[static_cast<std::size_t>(r)];
    if (a == 0.0) continue;
    if (fit.r_min == 0) fit.r_min = r;
    fit.r_max = r;
    const double lr = std::log(static_cast<double>(r));
    switch (model) {
      case DecayModel::power:
        xs.push_back(lr);
        ys.push_back(std::log(a));
        break;
      case DecayModel::log:
        xs.push_back(std::log(lr));
        ys.push_back(std::log(a) + lr);
        break;
      case DecayModel::fprime_log:
        xs.push_back(std::log(lr));
        ys.push_back(std::log(a));
        break;
    }
  }
  if (xs.size() < 2) {
    throw DegenerateFitError(
        "fit_decay: fewer than 2 nonzero samples in range (" +
        std::to_string(xs.size()) + ")");
  }
  const LinearFit line = fit_line(xs, ys);
  fit.exponent = line.slope;
  fit.constant = std::exp(line.intercept);
  fit.points = xs.size();

  // Sup-norm constant against the fitted envelope with C = 1.
  double sup = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sup = std::max(sup, std::exp(ys[i] - fit.exponent * xs[i]));
  }
  fit.max_ratio = sup;
  return fit;
}

namespace detail {

double sup_weighted_hat(const std::vector<double>& abs_hat, double log_power) {
  double sup = 0.0;
  const auto support = static_cast<std::int64_t>(abs_hat.size()) - 1;
  for (std::int64_t r = 3; r <= support; ++r) {
    const double a = abs_hat[static_cast<std::size_t>(r)];
    if (a == 0.0) continue;
    const double lr = std::log(static_cast<double>(r));
    sup = std::max(sup, a * static_cast<double>(r) * std::pow(lr, log_power));
  }
  return sup;
}

double sup_weighted_prime(const std::vector<double>& abs_prime,
                          double log_power) {
  double sup = 0.0;
  const auto extent = static_cast<std::int64_t>(abs_prime.size()) - 1;
  for (std::int64_t d = 3; d <= extent; ++d) {
    const double a = abs_prime[static_cast<std::size_t>(d)];
    if (a == 0.0) continue;
    const double ld = std::log(static_cast<double>(d));
    sup = std::max(sup, a * std::pow(ld, log_power));
  }
  return sup;
}

double lemma2_ratio(double sup_input, double sup_output) {
  if (sup_input == 0.0 && sup_output == 0.0) return 0.0;
  return sup_output / sup_input;  // +inf for a vanishing input sup
}

void validate_n_list(const std::vector<std::int64_t>& N_list) {
  if (N_list.empty()) {
    throw std::invalid_argument("N list must not be empty");
  }
  for (std::size_t i = 0; i < N_list.size(); ++i) {
    if (N_list[i] < 1) {
      throw std::invalid_argument("N values must be >= 1");
    }
    if (i > 0 && N_list[i] <= N_list[i - 1]) {
      throw std::invalid_argument(
          "N list must be strictly ascending (offender: " +
          std::to_string(N_list[i]) + ")");
    }
  }
}

}  // namespace detail

std::vector<InghamPoint> ingham_check(std::int64_t h,
                                      const std::vector<std::int64_t>& N_list,
                                      const SieveTables& tables) {
  if (h < 1) {
    throw std::invalid_argument("ingham_check: h must be >= 1");
  }
  detail::validate_n_list(N_list);
  if (N_list.back() + h > tables.n_max()) {
    throw std::invalid_argument("ingham_check: max N + h exceeds sieve extent");
  }
  const double sigma = to_double(sigma_minus_one(h));
  constexpr double six_over_pi2 = 6.0 / (std::numbers::pi * std::numbers::pi);

  std::vector<InghamPoint> points;
  points.reserve(N_list.size());
  std::int64_t lhs = 0;
  std::int64_t n = 1;
  for (std::int64_t N : N_list) {
    for (; n <= N; ++n) {
      lhs += tables.divisor_count(n) * tables.divisor_count(n + h);
    }
    InghamPoint pt;
    pt.N = N;
    pt.lhs = lhs;
    const double logN = std::log(static_cast<double>(N));
    pt.rhs = six_over_pi2 * sigma * static_cast<double>(N) * logN * logN;
    pt.ratio = static_cast<double>(lhs) / pt.rhs;
    points.push_back(pt);
  }
  return points;
}

}  // namespace ramex
