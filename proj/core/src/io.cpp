#include "ramex/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace ramex {

namespace {

using ordered_json = nlohmann::ordered_json;

// Doubles enter JSON re-parsed from their 12-significant-digit rendering, so
// the dumped document never carries more digits than the CSV does.
ordered_json json_number(double x) {
  return ordered_json::parse(format_sig12(x), nullptr, true);
}

ordered_json json_value(double x) { return json_number(x); }
ordered_json json_value(const Rational& q) { return ordered_json(q.str()); }

std::string csv_value(double x) { return format_sig12(x); }
std::string csv_value(const Rational& q) { return q.str(); }

constexpr const char* kConvHeader =
    "N,h,brute_force,main_term,error,envelope,ratio\n";

template <typename T>
void append_conv_row(std::string& out, std::int64_t N, std::int64_t h,
                     const T& brute, const T& main, const T& error,
                     bool has_bound, double envelope, double ratio) {
  out += std::to_string(N);
  out += ',';
  out += std::to_string(h);
  out += ',';
  out += csv_value(brute);
  out += ',';
  out += csv_value(main);
  out += ',';
  out += csv_value(error);
  out += ',';
  if (has_bound) out += format_sig12(envelope);
  out += ',';
  if (has_bound) out += format_sig12(ratio);
  out += '\n';
}

template <typename T>
std::string report_csv(const ConvolutionReport<T>& r) {
  std::string out = kConvHeader;
  append_conv_row(out, r.N, r.h, r.brute, r.main, r.error, r.kind.has_value(),
                  r.bound, r.ratio);
  return out;
}

template <typename T>
std::string report_json(const ConvolutionReport<T>& r) {
  ordered_json j;
  j["N"] = r.N;
  j["h"] = r.h;
  j["f_label"] = r.f_label;
  j["g_label"] = r.g_label;
  j["brute_force"] = json_value(r.brute);
  j["main_term"] = json_value(r.main);
  j["error"] = json_value(r.error);
  if (r.kind) {
    j["kind"] = bound_kind_name(*r.kind);
    j["parameter"] = json_number(r.parameter);
    j["envelope"] = json_number(r.bound);
    j["ratio"] = json_number(r.ratio);
  }
  return j.dump(2) + "\n";
}

template <typename T>
std::string report_human(const ConvolutionReport<T>& r) {
  std::ostringstream os;
  os << "shifted convolution  f=" << r.f_label << "  g=" << r.g_label
     << "  N=" << r.N << "  h=" << r.h << "\n";
  os << "  brute force : " << csv_value(r.brute) << "\n";
  os << "  main term   : " << csv_value(r.main) << "\n";
  os << "  error       : " << csv_value(r.error) << "\n";
  if (r.kind) {
    os << "  envelope    : " << format_sig12(r.bound) << "  ("
       << bound_kind_name(*r.kind) << ", parameter "
       << format_sig12(r.parameter) << ")\n";
    os << "  |err|/env   : " << format_sig12(r.ratio) << "\n";
  }
  return os.str();
}

template <typename T>
std::string sweep_csv(const SweepResult<T>& s) {
  std::string out = kConvHeader;
  for (const auto& row : s.rows) {
    append_conv_row(out, row.N, s.h, row.brute, row.main, row.error, true,
                    row.envelope, row.ratio);
  }
  return out;
}

template <typename T>
std::string sweep_json(const SweepResult<T>& s) {
  ordered_json j;
  j["h"] = s.h;
  j["f_label"] = s.f_label;
  j["g_label"] = s.g_label;
  j["kind"] = bound_kind_name(s.kind);
  j["parameter"] = json_number(s.parameter);
  j["envelope_slope"] = json_number(s.envelope_slope);
  if (s.fitted_slope) {
    j["fitted_slope"] = json_number(*s.fitted_slope);
  } else {
    j["fitted_slope"] = nullptr;
    j["degenerate_reason"] = s.degenerate_reason;
  }
  j["zero_error_rows"] = s.zero_error_rows;
  ordered_json rows = ordered_json::array();
  for (const auto& row : s.rows) {
    ordered_json rj;
    rj["N"] = row.N;
    rj["brute_force"] = json_value(row.brute);
    rj["main_term"] = json_value(row.main);
    rj["error"] = json_value(row.error);
    rj["envelope"] = json_number(row.envelope);
    rj["ratio"] = json_number(row.ratio);
    rows.push_back(std::move(rj));
  }
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

template <typename T>
std::string sweep_human(const SweepResult<T>& s) {
  std::ostringstream os;
  os << "error sweep  f=" << s.f_label << "  g=" << s.g_label << "  h=" << s.h
     << "  bound=" << bound_kind_name(s.kind) << "("
     << format_sig12(s.parameter) << ")\n";
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"N", "brute_force", "main_term", "error", "envelope",
                   "ratio"});
  for (const auto& row : s.rows) {
    cells.push_back({std::to_string(row.N), csv_value(row.brute),
                     csv_value(row.main), csv_value(row.error),
                     format_sig12(row.envelope), format_sig12(row.ratio)});
  }
  std::vector<std::size_t> widths(cells[0].size(), 0);
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }
  for (const auto& row : cells) {
    os << " ";
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << " " << std::string(widths[c] - row[c].size(), ' ') << row[c];
    }
    os << "\n";
  }
  if (s.fitted_slope) {
    os << "  fitted |error| slope : " << format_sig12(*s.fitted_slope) << "\n";
    os << "  envelope exponent    : " << format_sig12(s.envelope_slope)
       << "\n";
  } else {
    os << "  fit degenerate: " << s.degenerate_reason;
    if (s.zero_error_rows == s.rows.size()) {
      os << " (all errors exactly zero)";
    }
    os << "\n";
  }
  if (s.zero_error_rows > 0) {
    os << "  zero-error rows dropped from fit: " << s.zero_error_rows << "\n";
  }
  return os.str();
}

}  // namespace

std::optional<OutputFormat> parse_output_format(std::string_view text) {
  if (text == "human") return OutputFormat::human;
  if (text == "csv") return OutputFormat::csv;
  if (text == "json") return OutputFormat::json;
  return std::nullopt;
}

std::string emit(const ConvolutionReport<double>& report,
                 OutputFormat format) {
  switch (format) {
    case OutputFormat::csv:
      return report_csv(report);
    case OutputFormat::json:
      return report_json(report);
    case OutputFormat::human:
      return report_human(report);
  }
  return {};
}

std::string emit(const ConvolutionReport<Rational>& report,
                 OutputFormat format) {
  switch (format) {
    case OutputFormat::csv:
      return report_csv(report);
    case OutputFormat::json:
      return report_json(report);
    case OutputFormat::human:
      return report_human(report);
  }
  return {};
}

std::string emit(const SweepResult<double>& sweep, OutputFormat format) {
  switch (format) {
    case OutputFormat::csv:
      return sweep_csv(sweep);
    case OutputFormat::json:
      return sweep_json(sweep);
    case OutputFormat::human:
      return sweep_human(sweep);
  }
  return {};
}

std::string emit(const SweepResult<Rational>& sweep, OutputFormat format) {
  switch (format) {
    case OutputFormat::csv:
      return sweep_csv(sweep);
    case OutputFormat::json:
      return sweep_json(sweep);
    case OutputFormat::human:
      return sweep_human(sweep);
  }
  return {};
}

std::string emit(const std::vector<InghamPoint>& points, std::int64_t h,
                 OutputFormat format) {
  switch (format) {
    case OutputFormat::csv: {
      std::string out = "N,lhs,rhs,ratio\n";
      for (const auto& p : points) {
        out += std::to_string(p.N) + "," + std::to_string(p.lhs) + "," +
               format_sig12(p.rhs) + "," + format_sig12(p.ratio) + "\n";
      }
      return out;
    }
    case OutputFormat::json: {
      ordered_json j;
      j["h"] = h;
      ordered_json rows = ordered_json::array();
      for (const auto& p : points) {
        ordered_json rj;
        rj["N"] = p.N;
        rj["lhs"] = p.lhs;
        rj["rhs"] = json_number(p.rhs);
        rj["ratio"] = json_number(p.ratio);
        rows.push_back(std::move(rj));
      }
      j["rows"] = std::move(rows);
      return j.dump(2) + "\n";
    }
    case OutputFormat::human: {
      std::ostringstream os;
      os << "divisor correlation vs (6/pi^2) sigma_{-1}(h) N ln^2 N,  h=" << h
         << "\n";
      for (const auto& p : points) {
        os << "  N=" << p.N << "  lhs=" << p.lhs
           << "  rhs=" << format_sig12(p.rhs)
           << "  ratio=" << format_sig12(p.ratio) << "\n";
      }
      return os.str();
    }
  }
  return {};
}

std::string emit(const DecayFit& fit, OutputFormat format) {
  switch (format) {
    case OutputFormat::csv: {
      std::string out = "model,exponent,constant,max_ratio,r_min,r_max,points\n";
      out += decay_model_name(fit.model) + "," + format_sig12(fit.exponent) +
             "," + format_sig12(fit.constant) + "," +
             format_sig12(fit.max_ratio) + "," + std::to_string(fit.r_min) +
             "," + std::to_string(fit.r_max) + "," +
             std::to_string(fit.points) + "\n";
      return out;
    }
    case OutputFormat::json: {
      ordered_json j;
      j["model"] = decay_model_name(fit.model);
      j["exponent"] = json_number(fit.exponent);
      j["constant"] = json_number(fit.constant);
      j["max_ratio"] = json_number(fit.max_ratio);
      j["r_min"] = fit.r_min;
      j["r_max"] = fit.r_max;
      j["points"] = fit.points;
      return j.dump(2) + "\n";
    }
    case OutputFormat::human: {
      std::ostringstream os;
      os << "decay fit (" << decay_model_name(fit.model) << " model)\n";
      os << "  exponent  : " << format_sig12(fit.exponent) << "\n";
      os << "  constant  : " << format_sig12(fit.constant)
         << "  (least squares)\n";
      os << "  max ratio : " << format_sig12(fit.max_ratio)
         << "  (sup against fitted envelope)\n";
      os << "  sample    : r in [" << fit.r_min << ", " << fit.r_max << "], "
         << fit.points << " nonzero points\n";
      return os.str();
    }
  }
  return {};
}

std::string emit(const Lemma2Sweep& sweep, OutputFormat format) {
  switch (format) {
    case OutputFormat::csv: {
      std::string out = "N,sup_input,sup_output,ratio\n";
      for (const auto& c : sweep.checks) {
        out += std::to_string(c.support) + "," + format_sig12(c.sup_input) +
               "," + format_sig12(c.sup_output) + "," +
               format_sig12(c.ratio) + "\n";
      }
      return out;
    }
    case OutputFormat::json: {
      ordered_json j;
      j["direction"] = sweep.direction;
      j["parameter"] = json_number(sweep.parameter);
      j["family"] = sweep.family_label;
      ordered_json rows = ordered_json::array();
      for (const auto& c : sweep.checks) {
        ordered_json rj;
        rj["N"] = c.support;
        rj["sup_input"] = json_number(c.sup_input);
        rj["sup_output"] = json_number(c.sup_output);
        rj["ratio"] = json_number(c.ratio);
        rows.push_back(std::move(rj));
      }
      j["rows"] = std::move(rows);
      return j.dump(2) + "\n";
    }
    case OutputFormat::human: {
      std::ostringstream os;
      os << "decay conversion sup pair, " << sweep.direction
         << " direction, parameter " << format_sig12(sweep.parameter)
         << ", family " << sweep.family_label << "\n";
      for (const auto& c : sweep.checks) {
        os << "  N=" << c.support << "  sup_in=" << format_sig12(c.sup_input)
           << "  sup_out=" << format_sig12(c.sup_output)
           << "  ratio=" << format_sig12(c.ratio) << "\n";
      }
      return os.str();
    }
  }
  return {};
}

namespace {

template <typename T>
std::string expansion_emit(const FiniteExpansion<T>& exp,
                           OutputFormat format) {
  switch (format) {
    case OutputFormat::csv: {
      std::string out = "r,coefficient\n";
      for (std::int64_t r = 1; r <= exp.support(); ++r) {
        out += std::to_string(r) + "," + csv_value(exp.at(r)) + "\n";
      }
      return out;
    }
    case OutputFormat::json: {
      ordered_json j;
      j["support"] = exp.support();
      j["source"] = exp.source_label();
      ordered_json coeffs = ordered_json::array();
      for (std::int64_t r = 1; r <= exp.support(); ++r) {
        coeffs.push_back(json_value(exp.at(r)));
      }
      j["coefficients"] = std::move(coeffs);
      return j.dump(2) + "\n";
    }
    case OutputFormat::human: {
      std::ostringstream os;
      os << "finite expansion of " << exp.source_label() << " at support "
         << exp.support() << "\n";
      for (std::int64_t r = 1; r <= exp.support(); ++r) {
        os << "  r=" << r << "  " << csv_value(exp.at(r)) << "\n";
      }
      return os.str();
    }
  }
  return {};
}

}  // namespace

std::string emit(const FiniteExpansion<double>& exp, OutputFormat format) {
  return expansion_emit(exp, format);
}

std::string emit(const FiniteExpansion<Rational>& exp, OutputFormat format) {
  return expansion_emit(exp, format);
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    std::cout.flush();
    if (!std::cout) throw std::runtime_error("failed writing to stdout");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
  out << content;
  out.flush();
  if (!out) throw std::runtime_error("failed writing to '" + path + "'");
}

}  // namespace ramex
