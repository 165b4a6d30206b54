#pragma once

#include <stdexcept>
#include <string>

namespace widthlab {

// Combinatorial work would exceed the configured cap (CLI exit code 3).
struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Instance too large for an exact method (oracle dimension cap).
struct OversizeError : std::runtime_error {
  explicit OversizeError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed config or input file (CLI exit code 4).
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace widthlab
