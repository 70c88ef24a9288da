#pragma once

#include <stdexcept>
#include <string>

namespace resgen {

/// Malformed or inconsistent input files.
class SchemaError : public std::runtime_error {
 public:
  explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

/// A model fit is infeasible for the given data (empty window, all-censored
/// hour, degenerate series, ...).
class CalibrationError : public std::runtime_error {
 public:
  explicit CalibrationError(const std::string& what) : std::runtime_error(what) {}
};

/// Stage wiring problems: missing upstream artifacts, stale or corrupted
/// inputs, bad configuration.
class PipelineError : public std::runtime_error {
 public:
  explicit PipelineError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace resgen
