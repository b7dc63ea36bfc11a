#pragma once

// Command-line front end: flag grammar, validation, and subcommand dispatch.
//
// Subcommands:
//   csum    Ramanujan sums: one value c_r(n) or a row c_r(h), r <= rmax
//   expand  finite-expansion coefficients of a family at support N
//   conv    one shifted-convolution report (brute force, main term, error)
//   sweep   per-N reports over an N list plus log-log error slope
//   ingham  divisor-correlation sums against the classical asymptotic
//   decay   coefficient-decay fits and the fhat/f' conversion sup pairs
//
// Exit statuses: 0 success, 1 runtime/I-O failure, 2 usage error.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramex/convolution.hpp"
#include "ramex/decay.hpp"
#include "ramex/families.hpp"
#include "ramex/io.hpp"

namespace ramex::cli {

// A flag-level problem: unknown family, out-of-hypothesis parameter,
// unsorted N list. Mapped to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown after --help output has been printed.
struct HelpShown {};

enum class Backend { exact, floating };

struct RunConfig {
  enum class Command { csum, expand, conv, sweep, ingham, decay };
  Command command = Command::conv;
  Backend backend = Backend::floating;
  OutputFormat output = OutputFormat::human;
  std::string output_path;  // empty = stdout
  std::uint64_t seed = 0;   // reserved for future randomized diagnostics
  int threads = 0;          // sweep parallelism; 0 = hardware
  bool force_exact = false;

  std::optional<FamilySpec> family_f;
  std::optional<FamilySpec> family_g;

  std::vector<std::int64_t> N_list;
  std::int64_t h = 0;
  std::int64_t n_max = 0;  // derived sieve extent

  // csum
  std::int64_t r = 0;
  std::int64_t n = -1;
  bool row_mode = false;
  std::int64_t r_max = 0;

  // theorem envelope for conv/sweep
  std::optional<BoundKind> theorem;
  double theorem_param = 0.0;

  // decay
  std::optional<DecayModel> model;
  std::string lemma2_direction;  // "forward" | "backward" | ""
  double lemma2_param = 0.0;
  bool dual_check = false;

  TrendSlack slack;
};

// Parses and validates argv (program name excluded). Throws UsageError on
// any flag-level problem and HelpShown after help output.
RunConfig parse_config(const std::vector<std::string>& args);

// Executes a validated config. Returns the process exit status.
int run(const RunConfig& config);

}  // namespace ramex::cli
