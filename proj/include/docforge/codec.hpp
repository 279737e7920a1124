#pragma once

#include <optional>
#include <string>
#include <vector>

#include "docforge/doctree.hpp"
#include "docforge/tokens.hpp"
#include "docforge/vocab.hpp"

namespace docforge {

/// Depth-first serialization of a tree into the flat token form.
///
/// Each object pair (k, v) emits [START_k] ... [END_k]; an array under k
/// emits one complete group per element; a text leaf emits a single Text
/// item, or a ClassToken when its string is a registered class label. Empty
/// text emits nothing between the delimiters.
///
/// Throws Error(UnregisteredField | InvalidFieldName | SequenceTooLong).
TokenSeq encode(const DocTree& tree, const Vocab& vocab);

struct DecodeResult {
  DocTree tree;
  std::vector<RecoveryEvent> events;
};

/// Stack-based recovering parse of an arbitrary token sequence. Total: never
/// throws, always returns a valid tree. Malformed structure is repaired per
/// the rules documented in README (lost fields, stray ends, orphan text) and
/// every discarded item is reported as a RecoveryEvent.
DecodeResult decode(const TokenSeq& seq, const Vocab& vocab);

/// Prompt prefix for a registered task. Built-in tasks: "classification"
/// opens the class field, "read_text" opens text_sequence, "docvqa" wraps the
/// given question and opens the answer field. Any other registered prompt
/// name p opens the field p. Throws Error(UnregisteredPrompt |
/// MissingArgument).
TokenSeq make_prompt(const Vocab& vocab, const std::string& task,
                     const std::optional<std::string>& args = std::nullopt);

}  // namespace docforge
