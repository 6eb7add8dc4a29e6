#pragma once
// errors.hpp — exception types shared across the library

#include <stdexcept>
#include <string>

namespace pdc {

// Rejected parameters or malformed input files.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Requested work exceeds a configured budget guard.
struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pdc
