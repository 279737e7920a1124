#include "docforge/errors.hpp"

namespace docforge {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::UnregisteredField: return "UnregisteredField";
    case ErrorCode::InvalidFieldName: return "InvalidFieldName";
    case ErrorCode::SequenceTooLong: return "SequenceTooLong";
    case ErrorCode::UnregisteredPrompt: return "UnregisteredPrompt";
    case ErrorCode::MissingArgument: return "MissingArgument";
    case ErrorCode::SurfaceCollision: return "SurfaceCollision";
    case ErrorCode::SurfaceSyntax: return "SurfaceSyntax";
    case ErrorCode::EmptyGroundTruth: return "EmptyGroundTruth";
    case ErrorCode::NoGoldAnswers: return "NoGoldAnswers";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::MalformedGroundTruth: return "MalformedGroundTruth";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::NotUtf8: return "NotUtf8";
    case ErrorCode::JsonSyntax: return "JsonSyntax";
    case ErrorCode::DuplicateKey: return "DuplicateKey";
    case ErrorCode::UnsupportedValue: return "UnsupportedValue";
    case ErrorCode::MalformedRecord: return "MalformedRecord";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::EmptyPool: return "EmptyPool";
    case ErrorCode::AssetMissing: return "AssetMissing";
    case ErrorCode::FontGlyphMissing: return "FontGlyphMissing";
  }
  return "Unknown";
}

}  // namespace docforge
