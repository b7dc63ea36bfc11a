#include "ramex/custom.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <unordered_set>

#include "ramex/errors.hpp"

namespace ramex::detail {

namespace {

std::string strip(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

[[noreturn]] void fail(const std::string& path, std::size_t line,
                       const std::string& what) {
  throw IngestError(path + ":" + std::to_string(line) + ": " + what);
}

}  // namespace

RawCustomFile read_custom_file(const std::string& path, std::int64_t support) {
  std::ifstream in(path);
  if (!in) {
    throw IngestError("cannot open coefficient file '" + path + "'");
  }

  RawCustomFile raw;
  std::string line;
  std::size_t line_no = 0;

  if (!std::getline(in, line)) {
    throw IngestError(path + ": empty file; expected 'fprime' or 'fhat' header");
  }
  ++line_no;
  const std::string header = strip(line);
  if (header == "fprime") {
    raw.kind = CoefficientKind::fprime;
  } else if (header == "fhat") {
    raw.kind = CoefficientKind::fhat;
  } else {
    fail(path, line_no,
         "expected header 'fprime' or 'fhat', got '" + header + "'");
  }

  std::unordered_set<std::int64_t> seen;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string entry = strip(line);
    if (entry.empty()) continue;
    const auto comma = entry.find(',');
    if (comma == std::string::npos) {
      fail(path, line_no, "expected 'index,value', got '" + entry + "'");
    }
    const std::string index_text = strip(entry.substr(0, comma));
    const std::string value_text = strip(entry.substr(comma + 1));

    errno = 0;
    char* end = nullptr;
    const long long index = std::strtoll(index_text.c_str(), &end, 10);
    if (errno != 0 || end != index_text.c_str() + index_text.size() ||
        index_text.empty()) {
      fail(path, line_no, "malformed index '" + index_text + "'");
    }
    if (index < 1 || index > support) {
      fail(path, line_no,
           "index " + std::to_string(index) + " outside [1, " +
               std::to_string(support) + "]");
    }
    if (!seen.insert(index).second) {
      fail(path, line_no, "duplicate index " + std::to_string(index));
    }
    if (value_text.empty()) {
      fail(path, line_no, "missing value");
    }
    // Validate numeric form now so the error carries the line number; the
    // exact parse into the requested backend happens in convert_value.
    try {
      (void)parse_rational(value_text);
    } catch (const std::invalid_argument&) {
      fail(path, line_no, "non-numeric value '" + value_text + "'");
    }
    raw.entries.emplace_back(index, value_text);
  }

  std::sort(raw.entries.begin(), raw.entries.end());
  return raw;
}

double convert_value(const std::string& text, double) {
  // Accept p/q in float mode as well.
  if (const auto slash = text.find('/'); slash != std::string::npos) {
    return parse_double(text.substr(0, slash)) /
           parse_double(text.substr(slash + 1));
  }
  return parse_double(text);
}

Rational convert_value(const std::string& text, const Rational&) {
  return parse_rational(text);
}

}  // namespace ramex::detail
