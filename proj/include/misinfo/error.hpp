#pragma once

#include <stdexcept>
#include <string>

namespace misinfo {

enum class ErrorCode {
  kInvalidArgument,
  kIo,
  kParse,
  kDuplicateId,
  kEmptyCorpus,
  kUnusableQuery,
  kZeroVariance,
  kScorerUnavailable,
  kProtocol,
  kConfig,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::kIo: return "IO";
    case ErrorCode::kParse: return "PARSE";
    case ErrorCode::kDuplicateId: return "DUPLICATE_ID";
    case ErrorCode::kEmptyCorpus: return "EMPTY_CORPUS";
    case ErrorCode::kUnusableQuery: return "UNUSABLE_QUERY";
    case ErrorCode::kZeroVariance: return "ZERO_VARIANCE";
    case ErrorCode::kScorerUnavailable: return "SCORER_UNAVAILABLE";
    case ErrorCode::kProtocol: return "PROTOCOL";
    case ErrorCode::kConfig: return "CONFIG";
  }
  return "UNKNOWN";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  // External scorer failures may succeed on a later attempt.
  bool retryable() const noexcept { return code_ == ErrorCode::kScorerUnavailable; }

 private:
  ErrorCode code_;
};

}  // namespace misinfo
