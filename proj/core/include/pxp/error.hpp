#pragma once

#include <stdexcept>
#include <string>

namespace pxp {

// Bad input: out-of-range parameter, violated precondition, malformed config.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Requested size exceeds what dense storage can hold.
class SizeError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// A correctly configured computation went wrong (norm drift, I/O failure).
class RuntimeFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pxp
