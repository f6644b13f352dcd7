#pragma once

#include <stdexcept>
#include <string>

namespace botsim {

// Invalid parameters, malformed config files, bad CLI usage.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input data (location CSV and friends).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// An iterative solver ran out of iterations; carries the last residual.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double residual, long iterations)
      : std::runtime_error(what), residual(residual), iterations(iterations) {}
  double residual;
  long iterations;
};

// Filesystem failures while emitting results.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace botsim
