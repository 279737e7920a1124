#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace docforge {

class Value;

/// Ordered key/value pairs. Keys are unique within one object.
using Object = std::vector<std::pair<std::string, Value>>;

/// Ordered elements; each element is an Object or a Text leaf.
using Array = std::vector<Value>;

/// One node of a document tree: a Text leaf, an Object, or an Array.
class Value {
 public:
  Value() : data_(std::string{}) {}
  Value(std::string text) : data_(std::move(text)) {}
  Value(const char* text) : data_(std::string(text)) {}
  Value(Object object) : data_(std::move(object)) {}
  Value(Array array) : data_(std::move(array)) {}

  bool is_text() const { return std::holds_alternative<std::string>(data_); }
  bool is_object() const { return std::holds_alternative<Object>(data_); }
  bool is_array() const { return std::holds_alternative<Array>(data_); }

  const std::string& text() const { return std::get<std::string>(data_); }
  const Object& object() const { return std::get<Object>(data_); }
  const Array& array() const { return std::get<Array>(data_); }
  Object& object() { return std::get<Object>(data_); }
  Array& array() { return std::get<Array>(data_); }

  bool operator==(const Value& other) const { return data_ == other.data_; }
  bool operator!=(const Value& other) const { return !(*this == other); }

 private:
  std::variant<std::string, Object, Array> data_;
};

/// A parsed document. The root is always an Object; the token grammar has no
/// representation for a bare text or array root.
struct DocTree {
  Object root;

  bool operator==(const DocTree& other) const { return root == other.root; }
  bool operator!=(const DocTree& other) const { return root != other.root; }
};

/// True iff `name` is a legal field name: non-empty, `[A-Za-z0-9_.-]+`.
bool valid_field_name(const std::string& name);

/// Checks the structural invariants (key uniqueness, field-name syntax, array
/// elements restricted to Object/Text). Throws Error on violation.
void validate_tree(const DocTree& tree);

/// Collapses every single-element Array into its element, recursively.
/// Idempotent.
DocTree canonicalize(const DocTree& tree);

/// Convenience: pointer to the value stored under `key` in the root object,
/// or nullptr.
const Value* find_root_key(const DocTree& tree, const std::string& key);

}  // namespace docforge
