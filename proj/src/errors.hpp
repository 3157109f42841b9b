#pragma once

#include <stdexcept>
#include <string>

namespace biso {

enum class ErrorCode {
  Domain,
  NotStochastic,
  NotSymmetric,
  CapacityMismatch,
  Precondition,
  Parse,
  EquivalenceViolation,
  Io,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void throw_domain(const std::string& what) {
  throw Error(ErrorCode::Domain, what);
}

}  // namespace biso
