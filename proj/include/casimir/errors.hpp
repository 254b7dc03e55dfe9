#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

// Convergence or conditioning failure inside a numerical engine. Carries a
// human-readable diagnostic; callers that can degrade gracefully catch it.
class numerical_error : public std::runtime_error {
 public:
  explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

// Input outside the valid range of a table or operation. Message names the
// valid interval.
class range_error : public std::out_of_range {
 public:
  explicit range_error(const std::string& what) : std::out_of_range(what) {}
};

}  // namespace casimir
