#pragma once

#include <stdexcept>
#include <string>

namespace renorm {

// Input violates a structural precondition (disconnected graph, bad
// identification, malformed model wiring).
class StructuralError : public std::runtime_error {
 public:
  explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

// A linear solve did not reach the requested residual.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double residual, double tolerance)
      : std::runtime_error(what), residual(residual), tolerance(tolerance) {}
  double residual;
  double tolerance;
};

// An arc correspondence references an arc that does not exist downstairs.
class MappingError : public std::runtime_error {
 public:
  explicit MappingError(const std::string& what) : std::runtime_error(what) {}
};

// Supplied table data (e.g. a vertical lift table) is incomplete for the
// requested operation.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// A run-time parameter is outside its admissible range.
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

// The request would exceed a configured resource cap.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace renorm
