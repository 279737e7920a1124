#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace docforge {

/// One item of the flat sequence representation. Field delimiters carry the
/// field name; class/prompt tokens carry their registered name; Text carries
/// a raw text span.
struct TokenItem {
  enum class Kind { FieldStart, FieldEnd, ClassToken, PromptToken, Text };

  Kind kind;
  std::string payload;  // field/class/prompt name, or text content

  static TokenItem field_start(std::string name) {
    return {Kind::FieldStart, std::move(name)};
  }
  static TokenItem field_end(std::string name) {
    return {Kind::FieldEnd, std::move(name)};
  }
  static TokenItem class_token(std::string label) {
    return {Kind::ClassToken, std::move(label)};
  }
  static TokenItem prompt_token(std::string name) {
    return {Kind::PromptToken, std::move(name)};
  }
  static TokenItem text(std::string content) {
    return {Kind::Text, std::move(content)};
  }

  bool operator==(const TokenItem& other) const {
    return kind == other.kind && payload == other.payload;
  }
  bool operator!=(const TokenItem& other) const { return !(*this == other); }
};

using TokenSeq = std::vector<TokenItem>;

/// Anomaly recorded while decoding a malformed sequence. Decoding never
/// fails; every discarded item is covered by one of these.
struct RecoveryEvent {
  enum class Kind {
    LostField,     // unterminated or wrongly structured field discarded
    StrayEnd,      // FieldEnd with no matching open field
    OrphanText,    // text/class content with no open field
    PromptSkipped  // prompt token in content position
  };

  Kind kind;
  std::string name;      // field name, or the skipped payload
  std::size_t items = 1; // token items covered by this event

  bool operator==(const RecoveryEvent& other) const {
    return kind == other.kind && name == other.name && items == other.items;
  }
};

const char* recovery_kind_name(RecoveryEvent::Kind kind) noexcept;

}  // namespace docforge
