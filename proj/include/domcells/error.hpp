#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace domcells {

enum class ErrorKind {
  InvalidArgument,
  ParseError,
  LoopRejected,
  RangeError,
  NotDominating,
  NotMinimum,
  InvalidPartition,
  NotApplicable,
  Unproven,
  ReproductionFailure,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::ParseError: return "parse-error";
    case ErrorKind::LoopRejected: return "loop-rejected";
    case ErrorKind::RangeError: return "range-error";
    case ErrorKind::NotDominating: return "not-dominating";
    case ErrorKind::NotMinimum: return "not-minimum";
    case ErrorKind::InvalidPartition: return "invalid-partition";
    case ErrorKind::NotApplicable: return "not-applicable";
    case ErrorKind::Unproven: return "unproven";
    case ErrorKind::ReproductionFailure: return "reproduction-failure";
  }
  return "unknown";
}

// Single exception type for the library; callers dispatch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> offset = std::nullopt)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        offset_(offset) {}

  ErrorKind kind() const noexcept { return kind_; }

  // Byte offset into the input, set for parse errors.
  std::optional<std::size_t> offset() const noexcept { return offset_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> offset_;
};

}  // namespace domcells
