#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace striptopo {

/// Every failure the library can report, named after the rule it violates.
enum class ErrorCode {
  DuplicateId,
  UnknownIntervalRef,
  DoubleGluing,
  SelfGluing,
  SameSideGluing,
  BadEndpoints,
  BadIntervalIndex,
  DisconnectedSurface,
  NotAChain,
  NotOpenStripComponent,
  NonIncreasingInput,
  GraphsIntersect,
  BadInterval,
  BadEps,
  NonPositiveClearance,
  LevelRangeMismatch,
  OutOfDomain,
  ParseError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::vector<std::string> ids = {});

  ErrorCode code() const noexcept { return code_; }
  std::string_view rule() const noexcept { return to_string(code_); }
  /// Offending ids (strips, intervals, gluings), in the order they were detected.
  const std::vector<std::string>& ids() const noexcept { return ids_; }

 private:
  ErrorCode code_;
  std::vector<std::string> ids_;
};

/// Positioned document error; line and column are 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(std::string message, std::size_t line, std::size_t column);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace striptopo
