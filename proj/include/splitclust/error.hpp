#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace splitclust {

enum class ErrorKind {
  InvalidVertexId,
  UnknownVertex,
  DuplicateVertex,
  DuplicateEdge,
  SelfLoop,
  ParseError,
  NeighborhoodNotCovered,
  ForeignNeighbor,
  DuplicateSet,
  EmptySet,
  NotACover,
  InapplicableStep,
  InvalidCertificate,
  IsolatedVertexPresent,
  NotAClusterGraphAfter,
  NotNormalized,
  BudgetUnderflow,
  NotApplicable,
  WrongProblem,
  SizeLimitExceeded,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this type; `kind` is stable and
// is what the CLI maps to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what,
        std::optional<std::size_t> step = std::nullopt)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind),
        step_(step) {}

  ErrorKind kind() const noexcept { return kind_; }
  // Index of the offending step for InapplicableStep.
  std::optional<std::size_t> step() const noexcept { return step_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> step_;
};

}  // namespace splitclust
