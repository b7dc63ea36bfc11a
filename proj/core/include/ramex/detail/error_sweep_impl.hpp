#pragma once

// error_sweep implementation: one worker per hardware thread, rows assigned
// round-robin by index into a pre-sized vector, so the merged result is
// identical no matter how the workers interleave.

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace ramex {

template <typename T>
SweepResult<T> error_sweep(const FamilySpec& family_f,
                           const FamilySpec& family_g, BoundKind kind,
                           double parameter, std::int64_t h,
                           const std::vector<std::int64_t>& N_list,
                           const SieveTables& tables, int threads) {
  detail::validate_n_list(N_list);
  if (h < 1) {
    throw std::invalid_argument("error_sweep: theorem sweeps require h >= 1");
  }
  const std::int64_t needed = N_list.back() + h;
  if (needed > tables.n_max()) {
    throw std::invalid_argument("error_sweep: max N + h = " +
                                std::to_string(needed) +
                                " exceeds sieve extent " +
                                std::to_string(tables.n_max()));
  }

  SweepResult<T> sweep;
  sweep.h = h;
  sweep.f_label = family_f.label();
  sweep.g_label = family_g.label();
  sweep.kind = kind;
  sweep.parameter = parameter;
  sweep.envelope_slope =
      (kind == BoundKind::power_delta) ? 1.0 - parameter : 1.0;
  sweep.rows.resize(N_list.size());

  auto compute_row = [&](std::size_t i) {
    const std::int64_t N = N_list[i];
    const ArithTable<T> fprime = make_fprime<T>(family_f, N, tables);
    const ArithTable<T> gprime = make_fprime<T>(family_g, N + h, tables);
    const ConvolutionProblem<T> problem = make_problem(fprime, gprime, N, h);
    SweepRow<T>& row = sweep.rows[i];
    row.N = N;
    row.brute = brute_force(problem);
    row.main = main_term(problem, tables);
    row.error = row.brute - row.main;
    row.envelope = theorem_bound(kind, parameter, N);
    row.ratio = std::abs(to_double(row.error)) / row.envelope;
  };

  unsigned n_workers = threads > 0
                           ? static_cast<unsigned>(threads)
                           : std::max(1u, std::thread::hardware_concurrency());
  n_workers = std::min<unsigned>(n_workers,
                                 static_cast<unsigned>(N_list.size()));
  if (n_workers <= 1) {
    for (std::size_t i = 0; i < N_list.size(); ++i) compute_row(i);
  } else {
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> workers;
    workers.reserve(n_workers);
    for (unsigned w = 0; w < n_workers; ++w) {
      workers.emplace_back([&, w] {
        for (std::size_t i = w; i < N_list.size(); i += n_workers) {
          try {
            compute_row(i);
          } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
          }
        }
      });
    }
    for (auto& t : workers) t.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  // ln|error| vs ln N over the nonzero-error rows.
  std::vector<double> xs, ys;
  for (const auto& row : sweep.rows) {
    const double abs_err = std::abs(to_double(row.error));
    if (abs_err == 0.0) {
      ++sweep.zero_error_rows;
      continue;
    }
    xs.push_back(std::log(static_cast<double>(row.N)));
    ys.push_back(std::log(abs_err));
  }
  if (sweep.rows.size() < 5) {
    sweep.degenerate_reason = "fewer than 5 rows";
  } else if (xs.size() < 3) {
    sweep.degenerate_reason =
        "fewer than 3 nonzero-error rows (" + std::to_string(xs.size()) +
        " nonzero of " + std::to_string(sweep.rows.size()) + ")";
  } else {
    sweep.fitted_slope = fit_line(xs, ys).slope;
  }
  return sweep;
}

}  // namespace ramex
