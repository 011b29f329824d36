#pragma once

#include <stdexcept>
#include <string>

namespace pauc {

// Precondition violated by caller-supplied parameters.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// A power sum or key would not fit the 128-bit ceiling.
class OverflowError : public std::overflow_error {
 public:
  explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

// Projected memory or grid size exceeds the configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Quadrature result not within the integer-closeness tolerance.
class QuadratureError : public std::runtime_error {
 public:
  explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

// Table cache file unreadable or structurally invalid.
class CacheCorrupt : public std::runtime_error {
 public:
  explicit CacheCorrupt(const std::string& what) : std::runtime_error(what) {}
};

// Cache file written by a different format version.
class CacheVersionMismatch : public std::runtime_error {
 public:
  explicit CacheVersionMismatch(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pauc
