#pragma once

#include <stdexcept>
#include <string>

namespace fermapprox {

// Malformed input: bad instance text, invalid supports, mismatched solution.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A proven inequality failed to hold. Always indicates a bug or a corrupt
// solution, never a tolerance problem.
class GuaranteeViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dense realization requested above the configured mode cap.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace fermapprox
