#pragma once

// Serialization of results. Three formats:
//
//   csv    one mandatory header row; sweep/conv columns are exactly
//          N,h,brute_force,main_term,error,envelope,ratio
//   json   mirrors the result structs' field names
//   human  aligned table plus fit summaries
//
// Output is deterministic: fixed 12-significant-digit float rendering, exact
// rationals as p/q, rows sorted, and no timestamps anywhere in the payload.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ramex/convolution.hpp"
#include "ramex/decay.hpp"
#include "ramex/expansion.hpp"
#include "ramex/numeric.hpp"

namespace ramex {

enum class OutputFormat { human, csv, json };
std::optional<OutputFormat> parse_output_format(std::string_view text);

std::string emit(const ConvolutionReport<double>& report, OutputFormat format);
std::string emit(const ConvolutionReport<Rational>& report,
                 OutputFormat format);

std::string emit(const SweepResult<double>& sweep, OutputFormat format);
std::string emit(const SweepResult<Rational>& sweep, OutputFormat format);

std::string emit(const std::vector<InghamPoint>& points, std::int64_t h,
                 OutputFormat format);

std::string emit(const DecayFit& fit, OutputFormat format);

// One lemma2 check per sweep N, same direction and parameter throughout.
struct Lemma2Sweep {
  std::string direction;  // "forward" | "backward"
  double parameter = 0.0;
  std::string family_label;
  std::vector<Lemma2Check> checks;
};
std::string emit(const Lemma2Sweep& sweep, OutputFormat format);

std::string emit(const FiniteExpansion<double>& exp, OutputFormat format);
std::string emit(const FiniteExpansion<Rational>& exp, OutputFormat format);

// Writes content to path ("" or "-" means stdout). Throws std::runtime_error
// on I/O failure.
void write_output(const std::string& path, const std::string& content);

}  // namespace ramex
