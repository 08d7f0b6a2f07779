#pragma once

#include <stdexcept>
#include <string>

namespace nli {

// Bad or missing input files, malformed corpora, empty datasets.
struct DataError : std::runtime_error {
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Non-finite losses, diverged training, failed numeric checks.
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad command-line usage (maps to exit code 1).
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace nli
