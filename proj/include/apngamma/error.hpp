#pragma once

#include <stdexcept>
#include <string>

namespace apngamma {

enum class ErrorKind {
  InvalidArgument,
  DimensionMismatch,
  NotQuadratic,
  NotApn,
  NonUniqueNormal,
  AlgorithmMismatch,
  Parse,
  ResourceLimit,
  TheoremViolated,
};

const char* to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so the driver can map
// it onto an exit code without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace apngamma
