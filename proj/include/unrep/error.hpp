#pragma once

#include <stdexcept>
#include <string>

namespace unrep {

// Numeric values double as CLI exit codes and C API status values.
enum class ErrorCode : int {
  input = 1,
  capacity = 2,
  theorem_violation = 3,
  internal = 4,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string module, const std::string& message)
      : std::runtime_error(message), code_(code), module_(std::move(module)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& module() const noexcept { return module_; }

 private:
  ErrorCode code_;
  std::string module_;
};

class InputError : public Error {
 public:
  InputError(std::string module, const std::string& message)
      : Error(ErrorCode::input, std::move(module), message) {}
};

// An operation was called on an object that does not satisfy its
// precondition (e.g. a theorem check on a semigroup with no unrepresentations).
class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

class CapacityError : public Error {
 public:
  CapacityError(std::string module, const std::string& message)
      : Error(ErrorCode::capacity, std::move(module), message) {}
};

// A property that holds as a theorem failed to hold. Always an engine bug.
class TheoremViolation : public Error {
 public:
  TheoremViolation(std::string module, const std::string& message)
      : Error(ErrorCode::theorem_violation, std::move(module), message) {}
};

}  // namespace unrep
