#ifndef HILBERT_HODGE_ERROR_HPP
#define HILBERT_HODGE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace hilbert_hodge {

enum class ErrorCode {
  TrivialSystem,
  BadDegree,
  IncompatibleRank,
  DoubleTwist,
  BadHodgeIndex,
  OracleSizeExceeded,
  DictionaryMiss,
  InconsistentInvariants,
  ConfigError,
};

std::string_view to_string(ErrorCode code);

/// Domain error carrying a machine-readable code. The message is meant to be
/// shown to a user as-is.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message) : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hilbert_hodge

#endif  // HILBERT_HODGE_ERROR_HPP
