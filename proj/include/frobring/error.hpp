#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace frob {

enum class ErrorKind {
  InvalidArgument,
  NotCoprime,
  EmptyFactor,
  BadForm,
  DimensionMismatch,
  MixedM,
  Unsupported,
  EmptySet,
  BudgetExceeded,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Precondition or domain failure raised by every module in the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::EmptyFactor: return "EmptyFactor";
    case ErrorKind::BadForm: return "BadForm";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::MixedM: return "MixedM";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

}  // namespace frob
