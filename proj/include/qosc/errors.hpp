#pragma once

#include <stdexcept>
#include <string>

namespace qosc {

// Every failure raised by the library derives from Error, so callers (the CLI
// in particular) can map a kind onto an exit code without string matching.
enum class ErrorKind {
  InvalidParameter,
  UnsupportedMode,
  Numeric,
  UnknownSymbol,
  DimensionMismatch,
  Resource,
  Integrity,
  Usage,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidParameter: return "invalid-parameter";
    case ErrorKind::UnsupportedMode: return "unsupported-mode";
    case ErrorKind::Numeric: return "numeric";
    case ErrorKind::UnknownSymbol: return "unknown-symbol";
    case ErrorKind::DimensionMismatch: return "dimension-mismatch";
    case ErrorKind::Resource: return "resource";
    case ErrorKind::Integrity: return "integrity";
    case ErrorKind::Usage: return "usage";
  }
  return "unknown";
}

}  // namespace qosc
