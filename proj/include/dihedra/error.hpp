#pragma once

#include <stdexcept>
#include <string>

namespace dihedra {

/// Error categories surfaced by every module. The numeric values are part of
/// the C API (see dihedra.h) and must stay stable.
enum class ErrorCode : int {
  InvalidArgument = 1,
  Parse = 2,
  DegenerateSignature = 3,
  Parity = 4,
  NoAction = 5,
  NotAnalytic = 6,
  UnsupportedScope = 7,
  Budget = 8,
  Overflow = 9,
  Internal = 10,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace dihedra
