#pragma once

#include <stdexcept>
#include <string>

namespace scaff {

enum class ErrorCode {
  kInvalidArgument,
  kOutOfBounds,
  kSeedAlreadyNewColor,
  kDimensionTooSmall,
  kDimensionMismatch,
  kDuplicateMapping,
  kInvalidPalette,
  kStrayValue,
  kInvariantViolation,
  kSizeTooSmall,
  kInsufficientPoints,
  kDegenerateFit,
  kUnsupportedFormat,
  kIo,
};

/// Returns a short stable identifier such as "stray-value".
const char* to_string(ErrorCode code) noexcept;

/// The single exception type thrown by the library. Every failure carries an
/// ErrorCode so callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// True for failures caused by the filesystem rather than by input content.
  bool is_io() const noexcept { return code_ == ErrorCode::kIo; }

 private:
  ErrorCode code_;
};

}  // namespace scaff
