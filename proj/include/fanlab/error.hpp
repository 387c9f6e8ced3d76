#pragma once

#include <stdexcept>
#include <string>

namespace fanlab {

enum class ErrorKind {
  InvalidArgument,
  NonPositiveDensity,
  DomainError,
  NoTwoShock,
  NoConvergence,
  NoSubsolution,
  EmptyInterval,
  WindowTooSmall,
  UnsupportedOrder,
  TieUnresolved,
  QuadratureFailure,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above; the
/// C API maps them one-to-one onto status codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace fanlab
