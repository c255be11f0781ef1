#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace coauth {

enum class ErrorCode {
  EmptyLabel,
  FocalAbsent,
  InvalidGraph,
  NotConnected,
  TooSmall,
  NoEdges,
  NoConvergence,
  ZeroVariance,
  LengthMismatch,
  DegenerateTest,
  AlignmentError,
  EmptyColumn,
  Empty,
  ParseError,
  DuplicatePaperId,
  EmptyAuthors,
  HeaderMismatch,
  DuplicateAuthor,
  UnknownMetric,
  HttpError,
  RateLimited,
  MappingError,
  TooLarge,
  Io,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Exception type for every failure raised by the library. The code is the
/// stable, machine-checkable part; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace coauth
