#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "docforge/doctree.hpp"

namespace docforge {

/// Parses JSON text into a DocTree. Object key order is preserved, duplicate
/// keys are rejected, numbers and booleans become their literal string form
/// (float tokens verbatim), null and nested arrays are unsupported, and the
/// top level must be an object.
DocTree parse_doctree(const std::string& json_text);

/// parse_doctree over a file. Throws Error(IoError) when unreadable.
DocTree load_doctree(const std::filesystem::path& path);

/// Serializes back to JSON (insertion order kept). indent < 0 = compact.
std::string doctree_to_json(const DocTree& tree, int indent = -1);

nlohmann::ordered_json doctree_to_ordered_json(const DocTree& tree);

/// Reads a whole file as bytes. Throws Error(IoError).
std::string read_file(const std::filesystem::path& path);

void write_file(const std::filesystem::path& path, const std::string& bytes);

}  // namespace docforge
