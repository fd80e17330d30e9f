#pragma once

#include <stdexcept>
#include <string>

namespace monocone {

enum class ErrorKind {
  DuplicateLabel,
  UnknownLabel,
  CycleInCovers,
  SizeOutOfRange,
  IndexMismatch,
  DimensionMismatch,
  NotPointed,
  ParseError,
  ValidationError,
  FileNotFound,
  Internal,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

// Invariant failures inside the engine map to exit code 2, everything else to 1.
[[noreturn]] inline void internal_error(const std::string& msg) {
  throw Error(ErrorKind::Internal, msg);
}

inline void check_internal(bool ok, const std::string& msg) {
  if (!ok) internal_error(msg);
}

}  // namespace monocone
