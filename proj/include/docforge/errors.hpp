#pragma once

#include <stdexcept>
#include <string>

namespace docforge {

/// Error categories surfaced by the library. The CLI maps these onto its
/// exit-code contract; library users can switch on code().
enum class ErrorCode {
  // codec
  UnregisteredField,
  InvalidFieldName,
  SequenceTooLong,
  UnregisteredPrompt,
  MissingArgument,
  SurfaceCollision,
  SurfaceSyntax,
  // metrics
  EmptyGroundTruth,
  NoGoldAnswers,
  LengthMismatch,
  MalformedGroundTruth,
  // io
  IoError,
  NotUtf8,
  JsonSyntax,
  DuplicateKey,
  UnsupportedValue,
  MalformedRecord,
  // synthdog
  ConfigError,
  EmptyPool,
  AssetMissing,
  FontGlyphMissing,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

const char* error_code_name(ErrorCode code) noexcept;

}  // namespace docforge
