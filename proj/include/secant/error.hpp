#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace secant {

enum class ErrorKind {
  Domain,
  DuplicateNode,
  NonvanishingTail,
  InternalMismatch,
  StratumOutOfRange,
  AmbiguousBundle,
  GeneratorDegreeUnknown,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Domain: return "DomainError";
    case ErrorKind::DuplicateNode: return "DuplicateNode";
    case ErrorKind::NonvanishingTail: return "NonvanishingTail";
    case ErrorKind::InternalMismatch: return "InternalMismatch";
    case ErrorKind::StratumOutOfRange: return "StratumOutOfRange";
    case ErrorKind::AmbiguousBundle: return "AmbiguousBundle";
    case ErrorKind::GeneratorDegreeUnknown: return "GeneratorDegreeUnknown";
  }
  return "UnknownError";
}

/// Internal-consistency failures signal a bug in this library, never bad input.
constexpr bool is_internal(ErrorKind kind) {
  return kind == ErrorKind::InternalMismatch ||
         kind == ErrorKind::NonvanishingTail;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace secant
