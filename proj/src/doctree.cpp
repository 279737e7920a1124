#include "docforge/doctree.hpp"

#include <unordered_set>

#include "docforge/errors.hpp"

namespace docforge {

bool valid_field_name(const std::string& name) {
  if (name.empty()) return false;
  for (char c : name) {
    bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
              (c >= '0' && c <= '9') || c == '_' || c == '.' || c == '-';
    if (!ok) return false;
  }
  return true;
}

namespace {

void validate_value(const Value& value);

void validate_object(const Object& object) {
  std::unordered_set<std::string> seen;
  for (const auto& [key, value] : object) {
    if (!valid_field_name(key)) {
      throw Error(ErrorCode::InvalidFieldName, "invalid field name: '" + key + "'");
    }
    if (!seen.insert(key).second) {
      throw Error(ErrorCode::DuplicateKey, "duplicate key: '" + key + "'");
    }
    validate_value(value);
  }
}

void validate_value(const Value& value) {
  if (value.is_object()) {
    validate_object(value.object());
  } else if (value.is_array()) {
    for (const Value& element : value.array()) {
      if (element.is_array()) {
        throw Error(ErrorCode::UnsupportedValue,
                    "array elements must be objects or text");
      }
      validate_value(element);
    }
  }
}

Value canonicalize_value(const Value& value) {
  if (value.is_text()) return value;
  if (value.is_object()) {
    Object out;
    out.reserve(value.object().size());
    for (const auto& [key, child] : value.object()) {
      out.emplace_back(key, canonicalize_value(child));
    }
    return Value(std::move(out));
  }
  const Array& array = value.array();
  if (array.size() == 1) return canonicalize_value(array.front());
  Array out;
  out.reserve(array.size());
  for (const Value& element : array) out.push_back(canonicalize_value(element));
  return Value(std::move(out));
}

}  // namespace

void validate_tree(const DocTree& tree) { validate_object(tree.root); }

DocTree canonicalize(const DocTree& tree) {
  DocTree out;
  out.root.reserve(tree.root.size());
  for (const auto& [key, value] : tree.root) {
    out.root.emplace_back(key, canonicalize_value(value));
  }
  return out;
}

const Value* find_root_key(const DocTree& tree, const std::string& key) {
  for (const auto& [k, v] : tree.root) {
    if (k == key) return &v;
  }
  return nullptr;
}

}  // namespace docforge
