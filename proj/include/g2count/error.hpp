#pragma once

#include <stdexcept>
#include <string>

namespace g2c {

// Classes of failure. Each maps onto one of the stable CLI / C API codes.
enum class ErrorKind {
  Usage,
  Parse,
  Validation,
  BoundNotMet,
  EmptyRange,
  Ramified,
  DenominatorVanishes,
  GuardExceeded,
  NonGeneric,
  NotRational,
  Exhausted,
  Inconsistent,
  Internal,
};

const char* error_kind_name(ErrorKind kind) noexcept;

// Process exit code for an error class: 2 usage, 3 skip exhaustion, 4 internal.
int error_exit_code(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace g2c
