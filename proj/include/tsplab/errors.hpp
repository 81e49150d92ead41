#pragma once

#include <stdexcept>
#include <string>

namespace tsplab {

/// Raised on malformed or unsupported instance/spec files. Carries the
/// 1-based line number when one is known (0 otherwise).
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& message, int line = 0)
        : std::runtime_error(line > 0 ? message + " (line " + std::to_string(line) + ")"
                                      : message),
          line_(line) {}

    int line() const noexcept { return line_; }

  private:
    int line_;
};

/// Raised when an AlgorithmConfig or ExperimentSpec is invalid or a
/// parameter is not applicable to the selected algorithm.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace tsplab
