#include "docforge/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <variant>
#include <vector>

#include "docforge/errors.hpp"

namespace docforge {
namespace {

using ordered_json = nlohmann::ordered_json;

/// 1-based line/column of a byte offset, for syntax error messages.
std::pair<std::size_t, std::size_t> line_column(const std::string& text,
                                                std::size_t byte_pos) {
  byte_pos = std::min(byte_pos, text.size());
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte_pos; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

/// SAX handler that builds a DocTree directly, so that key order survives and
/// duplicate keys can be rejected (a DOM pass would silently drop them).
class TreeBuilder : public nlohmann::json_sax<ordered_json> {
 public:
  explicit TreeBuilder(const std::string& source) : source_(source) {}

  bool null() override {
    throw Error(ErrorCode::UnsupportedValue, "null values are not representable");
  }

  bool boolean(bool val) override {
    attach(Value(val ? "true" : "false"));
    return true;
  }

  bool number_integer(number_integer_t val) override {
    attach(Value(std::to_string(val)));
    return true;
  }

  bool number_unsigned(number_unsigned_t val) override {
    attach(Value(std::to_string(val)));
    return true;
  }

  bool number_float(number_float_t /*val*/, const string_t& raw) override {
    // Keep the literal token so 2.50 does not turn into 2.5.
    attach(Value(raw));
    return true;
  }

  bool string(string_t& val) override {
    attach(Value(std::move(val)));
    return true;
  }

  bool binary(binary_t& /*val*/) override {
    throw Error(ErrorCode::UnsupportedValue, "binary values are not representable");
  }

  bool start_object(std::size_t /*elements*/) override {
    if (stack_.empty() && root_done_) {
      throw Error(ErrorCode::UnsupportedValue, "multiple top-level values");
    }
    stack_.emplace_back(ObjCtx{});
    return true;
  }

  bool key(string_t& val) override {
    auto& ctx = std::get<ObjCtx>(stack_.back());
    if (!valid_field_name(val)) {
      throw Error(ErrorCode::InvalidFieldName,
                  "invalid field name \"" + val + "\"");
    }
    if (!ctx.seen.insert(val).second) {
      throw Error(ErrorCode::DuplicateKey, "duplicate key \"" + val + "\"");
    }
    ctx.pending = std::move(val);
    return true;
  }

  bool end_object() override {
    auto pairs = std::move(std::get<ObjCtx>(stack_.back()).pairs);
    stack_.pop_back();
    attach(Value(std::move(pairs)));
    return true;
  }

  bool start_array(std::size_t /*elements*/) override {
    if (stack_.empty()) {
      throw Error(ErrorCode::UnsupportedValue,
                  "top-level value must be an object");
    }
    if (std::holds_alternative<ArrCtx>(stack_.back())) {
      throw Error(ErrorCode::UnsupportedValue, "arrays may not nest directly");
    }
    stack_.emplace_back(ArrCtx{});
    return true;
  }

  bool end_array() override {
    auto items = std::move(std::get<ArrCtx>(stack_.back()).items);
    stack_.pop_back();
    attach(Value(std::move(items)));
    return true;
  }

  bool parse_error(std::size_t position, const std::string& last_token,
                   const nlohmann::detail::exception& /*ex*/) override {
    auto [line, col] = line_column(source_, position > 0 ? position - 1 : 0);
    std::ostringstream msg;
    msg << "json syntax error at line " << line << ", column " << col;
    if (!last_token.empty()) {
      msg << " (near '" << last_token << "')";
    }
    throw Error(ErrorCode::JsonSyntax, msg.str());
  }

  DocTree take() {
    if (!root_done_) {
      throw Error(ErrorCode::JsonSyntax, "empty input");
    }
    return DocTree{std::move(root_)};
  }

 private:
  struct ObjCtx {
    Object pairs;
    std::set<std::string> seen;
    std::string pending;
  };
  struct ArrCtx {
    Array items;
  };

  void attach(Value value) {
    if (stack_.empty()) {
      if (!value.is_object()) {
        throw Error(ErrorCode::UnsupportedValue,
                    "top-level value must be an object");
      }
      if (root_done_) {
        throw Error(ErrorCode::UnsupportedValue, "multiple top-level values");
      }
      root_ = std::move(value.object());
      root_done_ = true;
      return;
    }
    if (auto* obj = std::get_if<ObjCtx>(&stack_.back())) {
      obj->pairs.emplace_back(std::move(obj->pending), std::move(value));
    } else {
      std::get<ArrCtx>(stack_.back()).items.push_back(std::move(value));
    }
  }

  const std::string& source_;
  std::vector<std::variant<ObjCtx, ArrCtx>> stack_;
  Object root_;
  bool root_done_ = false;
};

ordered_json value_to_json(const Value& value) {
  if (value.is_text()) {
    return ordered_json(value.text());
  }
  if (value.is_array()) {
    auto arr = ordered_json::array();
    for (const auto& item : value.array()) {
      arr.push_back(value_to_json(item));
    }
    return arr;
  }
  auto obj = ordered_json::object();
  for (const auto& [key, child] : value.object()) {
    obj[key] = value_to_json(child);
  }
  return obj;
}

}  // namespace

DocTree parse_doctree(const std::string& json_text) {
  TreeBuilder builder(json_text);
  nlohmann::ordered_json::sax_parse(json_text, &builder);
  return builder.take();
}

DocTree load_doctree(const std::filesystem::path& path) {
  return parse_doctree(read_file(path));
}

nlohmann::ordered_json doctree_to_ordered_json(const DocTree& tree) {
  return value_to_json(Value(tree.root));
}

std::string doctree_to_json(const DocTree& tree, int indent) {
  return doctree_to_ordered_json(tree).dump(indent);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::IoError, "cannot open " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) {
    throw Error(ErrorCode::IoError, "cannot read " + path.string());
  }
  return std::move(buf).str();
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
  }
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.flush();
  if (!out) {
    throw Error(ErrorCode::IoError, "cannot write " + path.string());
  }
}

}  // namespace docforge
