#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace idag {

enum class ErrorKind {
  CycleDetected,
  BadEndpoint,
  ZeroWeight,
  DuplicateNodeId,
  AntipodeWeight,
  InterfaceMismatch,
  ModeMismatch,
  NotBijective,
  SearchBudgetExceeded,
  TypeMismatch,
  SyntaxError,
  UnsupportedGenerator,
  IndexOutOfRange,
  NotATopologicalSorting,
  NotAdjacentTransposition,
  ArityMismatch,
  BadInput,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::BadEndpoint: return "BadEndpoint";
    case ErrorKind::ZeroWeight: return "ZeroWeight";
    case ErrorKind::DuplicateNodeId: return "DuplicateNodeId";
    case ErrorKind::AntipodeWeight: return "AntipodeWeight";
    case ErrorKind::InterfaceMismatch: return "InterfaceMismatch";
    case ErrorKind::ModeMismatch: return "ModeMismatch";
    case ErrorKind::NotBijective: return "NotBijective";
    case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnsupportedGenerator: return "UnsupportedGenerator";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotATopologicalSorting: return "NotATopologicalSorting";
    case ErrorKind::NotAdjacentTransposition: return "NotAdjacentTransposition";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::BadInput: return "BadInput";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI exit-code contract) can dispatch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace idag
