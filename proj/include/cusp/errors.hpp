#pragma once

#include <stdexcept>
#include <string>

namespace cusp {

// Raised when two computations that must agree do not. Always a bug, never bad input.
class IntegrityError : public std::logic_error {
 public:
  explicit IntegrityError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace cusp
