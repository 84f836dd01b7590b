#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mgb {

/// A documented precondition was violated by the caller.
class UsageError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed or inconsistent user input (problem files, basis files, flags).
/// Line and column are 1-based; zero means "not applicable".
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& message, std::size_t line = 0,
                      std::size_t column = 0);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// An internal invariant failed. Always a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A scheduler worker died or broke the message protocol.
class WorkerFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Expensive per-step checks (degree preservation during reduction).
/// Initialized from GB_DEBUG_ASSERT=1; can be overridden at runtime.
bool debug_asserts_enabled();
void set_debug_asserts(bool enabled);

}  // namespace mgb
