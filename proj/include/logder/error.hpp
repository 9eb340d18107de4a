#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace logder {

enum class ErrorKind {
  InvalidArgument,
  ZeroForm,
  DuplicateHyperplane,
  RankTooLow,
  NotMember,
  SingularTransform,
  CapExceeded,
  MissingCoordinateTriangle,
  NotLogarithmic,
  DegreeSumMismatch,
  AllZeroCoefficients,
  InvalidParams,
  WrongFamily,
  NotDecomposable,
  PencilLike,
  RankCollapse,
  EmptyGraph,
  TooFewEdges,
  ParseError,
  NonlinearTerm,
};

std::string_view to_string(ErrorKind kind);

// Every library failure is reported through this type; `kind` lets callers
// (and the CLI exit-code mapping) distinguish input errors from bugs.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace logder
