#pragma once

#include <stdexcept>
#include <string>

namespace ramex {

// A numeric oracle (e.g. the root-of-unity Ramanujan-sum evaluation) failed
// its internal tolerance. This signals a bug in the library or a broken
// floating-point environment, never bad user input.
class OracleToleranceError : public std::runtime_error {
 public:
  explicit OracleToleranceError(const std::string& what)
      : std::runtime_error(what) {}
};

// An operation with a deliberate size guard (cubic-cost double expansion,
// exact-backend sweeps) was asked to exceed it.
class SizeLimitError : public std::runtime_error {
 public:
  explicit SizeLimitError(const std::string& what)
      : std::runtime_error(what) {}
};

// A regression/fit was requested on data that cannot support one
// (all-zero coefficients, too few nonzero samples).
class DegenerateFitError : public std::runtime_error {
 public:
  explicit DegenerateFitError(const std::string& what)
      : std::runtime_error(what) {}
};

// A coefficient file failed validation; the message names the line.
class IngestError : public std::runtime_error {
 public:
  explicit IngestError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ramex
