#pragma once

#include <stdexcept>
#include <string>

namespace schurkit {

// Malformed input data: bad partition text, mismatched sizes, invalid
// Frobenius coordinates, and the like.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// A configured limit was exceeded (e.g. full character-table degree cap).
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

// Internal consistency failure in assembled data, e.g. a chain complex whose
// differentials do not compose to zero.
class IntegrityError : public std::runtime_error {
 public:
  explicit IntegrityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace schurkit
