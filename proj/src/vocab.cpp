#include "docforge/vocab.hpp"

#include <unordered_set>

#include "docforge/doctree.hpp"
#include "docforge/errors.hpp"

namespace docforge {

namespace {

void check_names(const std::vector<std::string>& names, const char* what) {
  for (const auto& name : names) {
    if (!valid_field_name(name)) {
      throw Error(ErrorCode::InvalidFieldName,
                  std::string(what) + " name not embeddable in a token: '" + name + "'");
    }
  }
}

void add_surface(std::unordered_set<std::string>& surfaces, std::string surface) {
  if (!surfaces.insert(surface).second) {
    throw Error(ErrorCode::SurfaceCollision,
                "two registered names render to the same token " + surface);
  }
}

}  // namespace

Vocab::Vocab(std::vector<std::string> fields, std::vector<std::string> classes,
             std::vector<std::string> prompts, std::size_t max_items)
    : fields_(std::move(fields)),
      classes_(std::move(classes)),
      prompts_(std::move(prompts)),
      max_items_(max_items) {
  check_names(fields_, "field");
  check_names(classes_, "class");
  check_names(prompts_, "prompt");

  // All rendered surfaces must be pairwise distinct: fields contribute two
  // tokens each, classes and prompts one.
  std::unordered_set<std::string> surfaces;
  for (const auto& f : fields_) {
    add_surface(surfaces, "[START_" + f + "]");
    add_surface(surfaces, "[END_" + f + "]");
  }
  for (const auto& c : classes_) add_surface(surfaces, "[" + c + "]");
  for (const auto& p : prompts_) add_surface(surfaces, "[" + p + "]");

  field_set_.insert(fields_.begin(), fields_.end());
  class_set_.insert(classes_.begin(), classes_.end());
  prompt_set_.insert(prompts_.begin(), prompts_.end());
}

}  // namespace docforge
