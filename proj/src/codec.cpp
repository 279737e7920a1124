#include "docforge/codec.hpp"

#include <cassert>
#include <unordered_map>

#include "docforge/errors.hpp"

namespace docforge {

namespace {

class Encoder {
 public:
  Encoder(const Vocab& vocab) : vocab_(vocab) {}

  TokenSeq run(const DocTree& tree) {
    emit_object(tree.root);
    if (vocab_.max_items() > 0 && out_.size() > vocab_.max_items()) {
      throw Error(ErrorCode::SequenceTooLong,
                  "sequence of " + std::to_string(out_.size()) +
                      " items exceeds limit " + std::to_string(vocab_.max_items()));
    }
    return std::move(out_);
  }

 private:
  void emit_object(const Object& object) {
    for (const auto& [key, value] : object) {
      if (!valid_field_name(key)) {
        throw Error(ErrorCode::InvalidFieldName, "invalid field name: '" + key + "'");
      }
      if (!vocab_.has_field(key)) {
        throw Error(ErrorCode::UnregisteredField,
                    "field not in vocabulary: '" + key + "'");
      }
      if (value.is_array()) {
        // one complete group per element
        for (const Value& element : value.array()) emit_group(key, element);
      } else {
        emit_group(key, value);
      }
    }
  }

  void emit_group(const std::string& key, const Value& value) {
    out_.push_back(TokenItem::field_start(key));
    if (value.is_object()) {
      emit_object(value.object());
    } else {
      const std::string& text = value.text();
      if (!text.empty()) {
        if (vocab_.has_class(text)) {
          out_.push_back(TokenItem::class_token(text));
        } else {
          out_.push_back(TokenItem::text(text));
        }
      }
    }
    out_.push_back(TokenItem::field_end(key));
  }

  const Vocab& vocab_;
  TokenSeq out_;
};

// ---------------------------------------------------------------------------
// Decoding: a frame per open field. A closed frame yields an Object when its
// body held only child groups, a Text value when it held only text, and is
// lost when it mixed the two.

struct Frame {
  std::string key;
  std::size_t start_index = 0;  // index of the opening item
  std::vector<std::pair<std::string, Value>> groups;
  std::vector<std::string> texts;
};

class Decoder {
 public:
  DecodeResult run(const TokenSeq& seq) {
    stack_.push_back(Frame{});  // root frame; key unused
    for (index_ = 0; index_ < seq.size(); ++index_) {
      const TokenItem& item = seq[index_];
      switch (item.kind) {
        case TokenItem::Kind::FieldStart:
          stack_.push_back(Frame{item.payload, index_, {}, {}});
          break;
        case TokenItem::Kind::FieldEnd:
          handle_end(item.payload);
          break;
        case TokenItem::Kind::Text:
        case TokenItem::Kind::ClassToken:
          if (stack_.size() == 1) {
            events_.push_back({RecoveryEvent::Kind::OrphanText, item.payload, 1});
          } else {
            stack_.back().texts.push_back(item.payload);
          }
          break;
        case TokenItem::Kind::PromptToken:
          events_.push_back({RecoveryEvent::Kind::PromptSkipped, item.payload, 1});
          break;
      }
    }
    // unterminated fields at end of input, innermost first
    while (stack_.size() > 1) lose_top();

    DecodeResult result;
    result.tree.root = assemble(std::move(stack_.back().groups));
    result.events = std::move(events_);
    return result;
  }

 private:
  void handle_end(const std::string& key) {
    // nearest enclosing open field with this name
    std::size_t match = stack_.size();
    for (std::size_t i = stack_.size(); i-- > 1;) {
      if (stack_[i].key == key) {
        match = i;
        break;
      }
    }
    if (match == stack_.size()) {
      events_.push_back({RecoveryEvent::Kind::StrayEnd, key, 1});
      return;
    }
    while (stack_.size() - 1 > match) lose_top();
    close_top();
  }

  // Properly close the top frame and attach its value to the parent.
  void close_top() {
    Frame frame = std::move(stack_.back());
    stack_.pop_back();
    if (!frame.groups.empty() && !frame.texts.empty()) {
      // wrongly structured: text mixed with child fields; the field is lost
      events_.push_back({RecoveryEvent::Kind::LostField, frame.key,
                         index_ - frame.start_index + 1});
      return;
    }
    Value value;
    if (!frame.groups.empty()) {
      value = Value(assemble(std::move(frame.groups)));
    } else if (!frame.texts.empty()) {
      value = Value(join(frame.texts));
    } else {
      value = Value(std::string{});
    }
    stack_.back().groups.emplace_back(std::move(frame.key), std::move(value));
  }

  // Discard the top frame entirely (unterminated field).
  void lose_top() {
    Frame frame = std::move(stack_.back());
    stack_.pop_back();
    events_.push_back({RecoveryEvent::Kind::LostField, frame.key,
                       index_ - frame.start_index});
  }

  // Fold completed sibling groups into an ordered object. Repeated keys
  // collect into an Array in first-occurrence position.
  static Object assemble(std::vector<std::pair<std::string, Value>> groups) {
    std::vector<std::pair<std::string, Array>> buckets;
    std::unordered_map<std::string, std::size_t> position;
    for (auto& [key, value] : groups) {
      auto it = position.find(key);
      if (it == position.end()) {
        position.emplace(key, buckets.size());
        buckets.emplace_back(std::move(key), Array{std::move(value)});
      } else {
        buckets[it->second].second.push_back(std::move(value));
      }
    }
    Object object;
    object.reserve(buckets.size());
    for (auto& [key, values] : buckets) {
      if (values.size() == 1) {
        object.emplace_back(std::move(key), std::move(values.front()));
      } else {
        object.emplace_back(std::move(key), Value(std::move(values)));
      }
    }
    return object;
  }

  static std::string join(const std::vector<std::string>& parts) {
    std::string out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) {
      out += ' ';
      out += parts[i];
    }
    return out;
  }

  std::vector<Frame> stack_;
  std::vector<RecoveryEvent> events_;
  std::size_t index_ = 0;
};

}  // namespace

TokenSeq encode(const DocTree& tree, const Vocab& vocab) {
  return Encoder(vocab).run(tree);
}

DecodeResult decode(const TokenSeq& seq, const Vocab&) {
  return Decoder().run(seq);
}

TokenSeq make_prompt(const Vocab& vocab, const std::string& task,
                     const std::optional<std::string>& args) {
  if (!vocab.has_prompt(task)) {
    throw Error(ErrorCode::UnregisteredPrompt, "prompt not in vocabulary: '" + task + "'");
  }
  if (task == "docvqa") {
    if (!args || args->empty()) {
      throw Error(ErrorCode::MissingArgument,
                  "question-conditioned prompt '" + task + "' requires a question");
    }
    return {TokenItem::field_start("question"), TokenItem::text(*args),
            TokenItem::field_end("question"), TokenItem::field_start("answer")};
  }
  std::string field = task;
  if (task == "classification") {
    field = "class";
  } else if (task == "read_text") {
    field = "text_sequence";
  }
  return {TokenItem::field_start(field)};
}

}  // namespace docforge
