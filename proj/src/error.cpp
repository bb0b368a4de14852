#include "editforge/error.hpp"

namespace editforge {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Ok: return "Ok";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::IllegalTransition: return "IllegalTransition";
    case ErrorCode::Timeout: return "Timeout";
    case ErrorCode::Exhausted: return "Exhausted";
    case ErrorCode::BadRequest: return "BadRequest";
    case ErrorCode::DecodeError: return "DecodeError";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::BindError: return "BindError";
    case ErrorCode::NoCandidateBlocks: return "NoCandidateBlocks";
    case ErrorCode::Unroutable: return "Unroutable";
    case ErrorCode::ManifestCorrupt: return "ManifestCorrupt";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::ExtractorError: return "ExtractorError";
    case ErrorCode::ProviderError: return "ProviderError";
    case ErrorCode::PreconditionViolation: return "PreconditionViolation";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::InjectedFault: return "InjectedFault";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, std::string detail)
    : std::runtime_error(std::string(error_code_name(code)) +
                         (detail.empty() ? "" : ": " + detail)),
      code_(code),
      detail_(std::move(detail)) {}

void fail(ErrorCode code, std::string detail) { throw Error(code, std::move(detail)); }

}  // namespace editforge
