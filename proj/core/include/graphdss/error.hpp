#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace graphdss {

enum class ErrorCode {
  InvalidGraph,
  NotEulerian,
  InvalidTour,
  MismatchedEdges,
  NotTwoInTwoOut,
  NotCubic,
  Disconnected,
  Acyclic,
  WrongBlockCount,
  UnequalBlockSizes,
  InvalidDisk,
  Unrecoverable,
  NotACycle,
  MissingDataFile,
  InvariantMismatch,
  GenerationFailed,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for every contract violation in the library.
/// Callers that need to branch on the failure inspect code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace graphdss
