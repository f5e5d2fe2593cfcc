#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tfg {

// Mathematical validation failures. Each code is reported verbatim by the CLI.
enum class ErrorCode {
  DanglingEdge,
  DuplicateId,
  UnknownVertex,
  UnknownEdge,
  NotIrreducible,
  IsCycle,
  MixedGraphs,
  NonComposable,
  EmptyCycle,
  EndpointMismatch,
  DomainOverlap,
  RangeOverlap,
  IndexOutOfRange,
  NotDisjoint,
  NotInDomain,
  InvalidMultisection,
  ZeroTable,
  SourcesOverlap,
  RangeMismatch,
  NotFullGroupElement,
  InvalidSystem,
  InvalidArity,
  UnknownLetter,
  InvalidSubshift,
  NotPartition,
  NotBijective,
  WindowUndetermined,
  RuleIncomplete,
  NotFactorCode,
  UnsupportedIteration,
  InvalidPoint,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail),
        code_(code),
        detail_(std::move(detail)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace tfg
