#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace editforge {

// Stable numeric values: these are exported verbatim through the C API.
enum class ErrorCode : int {
  Ok = 0,
  ConfigError = 1,
  IllegalTransition = 2,
  Timeout = 3,
  Exhausted = 4,
  BadRequest = 5,
  DecodeError = 6,
  ParseError = 7,
  BindError = 8,
  NoCandidateBlocks = 9,
  Unroutable = 10,
  ManifestCorrupt = 11,
  LengthMismatch = 12,
  EmptyInput = 13,
  ExtractorError = 14,
  ProviderError = 15,
  PreconditionViolation = 16,
  IoError = 17,
  InjectedFault = 18,
  Internal = 19,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string detail);

  ErrorCode code() const noexcept { return code_; }
  // Short machine-readable qualifier, e.g. "multi-sentence" for a ParseError.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

[[noreturn]] void fail(ErrorCode code, std::string detail);

inline void require(bool condition, std::string_view what) {
  if (!condition) fail(ErrorCode::PreconditionViolation, std::string(what));
}

}  // namespace editforge
