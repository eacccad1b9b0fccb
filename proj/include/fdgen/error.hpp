#pragma once

#include <stdexcept>
#include <string>

namespace fdgen {

/// Raised when an operation receives input outside its precondition
/// (non-canonical code, trivial tree passed to unmerge, guard violations).
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace fdgen
