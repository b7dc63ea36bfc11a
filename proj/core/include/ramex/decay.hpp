#pragma once

// Decay-hypothesis checks and error-scaling measurement.
//
// The theorems' hypotheses are "<<" statements with unspecified constants, so
// every check here produces numbers, not point verdicts:
//
//   fit_decay        least-squares exponent + constant in the model's
//                    linearized coordinates, plus the sup-ratio against the
//                    fitted envelope (both stored, never conflated);
//   lemma2 checks    the sup pair (A, B) for the coefficient/Mobius-transform
//                    decay conversion, with A and B weighted by the matching
//                    log powers; boundedness of B/A across an N sweep is the
//                    meaningful assertion;
//   error_sweep      per-N convolution reports plus a log-log slope of
//                    |error| against N, compared to the envelope exponent;
//   ingham_check     sum_{n<=N} d(n) d(n+h) against
//                    (6/pi^2) sigma_{-1}(h) N (ln N)^2.
//
// Trend thresholds (slope slack, sup-ratio factor, Spearman cutoff) live in
// TrendSlack with the documented defaults; they encode "bounded up to logs"
// judgments and are tunable from the CLI.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramex/convolution.hpp"
#include "ramex/errors.hpp"
#include "ramex/expansion.hpp"
#include "ramex/families.hpp"
#include "ramex/numeric.hpp"
#include "ramex/sieve.hpp"

namespace ramex {

// Trend-judgment thresholds with their documented defaults.
struct TrendSlack {
  double slope_slack = 0.15;      // fitted slope <= envelope exponent + slack
  double sup_ratio_factor = 3.0;  // max/min sup-ratio across a sweep
  double spearman_max = 0.8;      // ratio-vs-N rank correlation, last window
};

enum class DecayModel { power, log, fprime_log };

// model        envelope (C = 1)          linearized regression
// power        r^exponent                ln|a_r|          vs ln r
// log          (1/r) (ln r)^exponent     ln|a_r| + ln r   vs ln ln r
// fprime-log   (ln d)^exponent           ln|a_d|          vs ln ln d
//
// exponent is the fitted slope (negative for decaying data); constant is
// exp(intercept), the least-squares C; max_ratio is sup |a_r|/envelope(r),
// the sup-norm C for the same fitted exponent.
struct DecayFit {
  DecayModel model = DecayModel::power;
  double exponent = 0.0;
  double constant = 0.0;
  double max_ratio = 0.0;
  std::int64_t r_min = 0;
  std::int64_t r_max = 0;
  std::size_t points = 0;  // nonzero samples used
};

std::string decay_model_name(DecayModel model);
std::optional<DecayModel> parse_decay_model(std::string_view text);

// Core fit on |a_r| addressed by r = index (values[r], slot 0 unused).
// Log models start at r = 3 (ln r > 1); the power model uses r >= 1.
// Throws DegenerateFitError when fewer than two distinct nonzero samples
// remain (e.g. the unit family).
DecayFit fit_decay_values(const std::vector<double>& abs_values,
                          DecayModel model);

template <typename T>
DecayFit fit_decay(const FiniteExpansion<T>& coeffs, DecayModel model) {
  std::vector<double> abs_values(static_cast<std::size_t>(coeffs.support()) + 1,
                                 0.0);
  for (std::int64_t r = 1; r <= coeffs.support(); ++r) {
    abs_values[static_cast<std::size_t>(r)] = std::abs(to_double(coeffs.at(r)));
  }
  return fit_decay_values(abs_values, model);
}

template <typename T>
DecayFit fit_decay(const ArithTable<T>& fprime, DecayModel model) {
  std::vector<double> abs_values(static_cast<std::size_t>(fprime.n_max()) + 1,
                                 0.0);
  for (std::int64_t d = 1; d <= fprime.n_max(); ++d) {
    abs_values[static_cast<std::size_t>(d)] = std::abs(to_double(fprime.at(d)));
  }
  return fit_decay_values(abs_values, model);
}

// Sup pair for one direction of the decay conversion between fhat and f'.
// forward (parameter alpha > 1):
//   sup_input  = sup_{3<=r<=S} |fhat(r)| r (ln r)^alpha
//   sup_output = sup_{3<=d<=S} |f'(d)| (ln d)^(alpha-1)
// backward (parameter beta > 1):
//   sup_input  = sup_{3<=d<=S} |f'(d)| (ln d)^beta
//   sup_output = sup_{3<=r<=S} |fhat(r)| r (ln r)^(beta-1)
// ratio = sup_output / sup_input (0 when both vanish; the single check is a
// diagnostic, boundedness across a sweep is what the theorems predict).
struct Lemma2Check {
  double parameter = 0.0;
  std::int64_t support = 0;
  double sup_input = 0.0;
  double sup_output = 0.0;
  double ratio = 0.0;
};

namespace detail {
double sup_weighted_hat(const std::vector<double>& abs_hat, double log_power);
double sup_weighted_prime(const std::vector<double>& abs_prime,
                          double log_power);
template <typename X>
std::vector<double> abs_vector(const X& x, std::int64_t extent) {
  std::vector<double> v(static_cast<std::size_t>(extent) + 1, 0.0);
  for (std::int64_t i = 1; i <= extent; ++i) {
    v[static_cast<std::size_t>(i)] = std::abs(to_double(x.at(i)));
  }
  return v;
}
double lemma2_ratio(double sup_input, double sup_output);
}  // namespace detail

template <typename T>
Lemma2Check lemma2_forward_check(const FiniteExpansion<T>& f_hat,
                                 const ArithTable<T>& fprime, double alpha) {
  if (!(alpha > 1.0)) {
    throw std::invalid_argument("lemma2_forward_check: alpha must be > 1");
  }
  Lemma2Check check;
  check.parameter = alpha;
  check.support = f_hat.support();
  check.sup_input = detail::sup_weighted_hat(
      detail::abs_vector(f_hat, f_hat.support()), alpha);
  check.sup_output = detail::sup_weighted_prime(
      detail::abs_vector(fprime, fprime.n_max()), alpha - 1.0);
  check.ratio = detail::lemma2_ratio(check.sup_input, check.sup_output);
  return check;
}

template <typename T>
Lemma2Check lemma2_backward_check(const ArithTable<T>& fprime,
                                  const FiniteExpansion<T>& f_hat,
                                  double beta) {
  if (!(beta > 1.0)) {
    throw std::invalid_argument("lemma2_backward_check: beta must be > 1");
  }
  Lemma2Check check;
  check.parameter = beta;
  check.support = f_hat.support();
  check.sup_input = detail::sup_weighted_prime(
      detail::abs_vector(fprime, fprime.n_max()), beta);
  check.sup_output = detail::sup_weighted_hat(
      detail::abs_vector(f_hat, f_hat.support()), beta - 1.0);
  check.ratio = detail::lemma2_ratio(check.sup_input, check.sup_output);
  return check;
}

template <typename T>
struct SweepRow {
  std::int64_t N = 0;
  T brute{};
  T main{};
  T error{};
  double envelope = 0.0;
  double ratio = 0.0;
};

template <typename T>
struct SweepResult {
  std::int64_t h = 0;
  std::string f_label;
  std::string g_label;
  BoundKind kind = BoundKind::power_delta;
  double parameter = 0.0;
  std::vector<SweepRow<T>> rows;  // ascending, distinct N
  // ln|error| vs ln N slope over nonzero-error rows. Absent (with a reason)
  // when the fit is degenerate: fewer than 5 rows or fewer than 3 nonzero
  // errors. A degenerate all-zero sweep is a trivially exact result, not a
  // failure.
  std::optional<double> fitted_slope;
  std::string degenerate_reason;
  double envelope_slope = 0.0;  // 1 - delta (power) or 1 (log, up to logs)
  std::size_t zero_error_rows = 0;
};

// Least-squares slope/intercept of y against x. Throws DegenerateFitError
// when fewer than two distinct x values are given.
struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
};
LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

// Spearman rank correlation (average ranks on ties).
double spearman(const std::vector<double>& x, const std::vector<double>& y);

namespace detail {
void validate_n_list(const std::vector<std::int64_t>& N_list);
}

// Runs one convolution report per N (rows are independent and are computed
// in parallel over the shared tables; results merge by index, so the output
// is deterministic regardless of scheduling). threads = 0 picks the hardware
// count.
template <typename T>
SweepResult<T> error_sweep(const FamilySpec& family_f,
                           const FamilySpec& family_g, BoundKind kind,
                           double parameter, std::int64_t h,
                           const std::vector<std::int64_t>& N_list,
                           const SieveTables& tables, int threads = 0);

// One (N, lhs, rhs, ratio) row per N:
//   lhs = sum_{n<=N} d(n) d(n+h),  rhs = (6/pi^2) sigma_{-1}(h) N (ln N)^2.
struct InghamPoint {
  std::int64_t N = 0;
  std::int64_t lhs = 0;
  double rhs = 0.0;
  double ratio = 0.0;
};
std::vector<InghamPoint> ingham_check(std::int64_t h,
                                      const std::vector<std::int64_t>& N_list,
                                      const SieveTables& tables);

}  // namespace ramex

#include "ramex/detail/error_sweep_impl.hpp"
