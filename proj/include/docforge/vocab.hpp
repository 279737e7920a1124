#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

namespace docforge {

/// Immutable registry of the special-token names a codec instance knows:
/// field names (rendered [START_f]/[END_f]), class labels (rendered [label])
/// and prompt names. Construction validates name syntax and rejects any two
/// registrations whose rendered surface forms collide. `max_items` bounds
/// encode output length (0 = unlimited).
class Vocab {
 public:
  Vocab(std::vector<std::string> fields, std::vector<std::string> classes = {},
        std::vector<std::string> prompts = {}, std::size_t max_items = 0);

  bool has_field(const std::string& name) const {
    return field_set_.count(name) != 0;
  }
  bool has_class(const std::string& label) const {
    return class_set_.count(label) != 0;
  }
  bool has_prompt(const std::string& name) const {
    return prompt_set_.count(name) != 0;
  }

  const std::vector<std::string>& fields() const { return fields_; }
  const std::vector<std::string>& classes() const { return classes_; }
  const std::vector<std::string>& prompts() const { return prompts_; }
  std::size_t max_items() const { return max_items_; }

 private:
  std::vector<std::string> fields_, classes_, prompts_;
  std::unordered_set<std::string> field_set_, class_set_, prompt_set_;
  std::size_t max_items_;
};

}  // namespace docforge
