#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "docforge/doctree.hpp"

namespace docforge {

/// One annotated word. The quad lists pixel corners clockwise from the top
/// left. `region`/`line` are layout indices used by consistency checks; they
/// are not serialized.
struct WordRecord {
  std::string text;
  std::array<std::array<double, 2>, 4> quad{};
  int region = 0;
  int line = 0;
};

/// One line of metadata.jsonl.
struct ManifestRecord {
  std::string file_name;
  DocTree gt_parse;
  std::vector<WordRecord> words;
};

std::string manifest_record_to_json(const ManifestRecord& record);
ManifestRecord manifest_record_from_json(const std::string& line);

/// Collects metadata records during generation and writes metadata.jsonl on
/// close. `add` may be called from multiple threads in any index order; the
/// file always comes out sorted by index.
class ManifestWriter {
 public:
  explicit ManifestWriter(std::filesystem::path dataset_dir);

  void add(std::size_t index, ManifestRecord record);

  /// Sorts and writes the file. Idempotent; also run by the destructor, but
  /// call it explicitly to surface write errors.
  void close();

  ~ManifestWriter();

  std::filesystem::path manifest_path() const;

 private:
  std::filesystem::path dataset_dir_;
  std::mutex mutex_;
  std::vector<std::pair<std::size_t, ManifestRecord>> records_;
  bool closed_ = false;
};

struct Violation {
  std::size_t record = 0;  ///< 1-based line number in metadata.jsonl
  std::string message;
};

struct ValidationReport {
  std::size_t records = 0;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

/// Re-checks a generated dataset. Always verifies record schema, file-name
/// uniqueness, and quad geometry. With `strict`, additionally opens each
/// image to bounds-check quads, requires the text_sequence field to equal the
/// space-joined word texts, and requires the ground truth to survive a token
/// round trip without recovery events.
ValidationReport validate_manifest(const std::filesystem::path& manifest_path,
                                   bool strict);

/// Width/height from a PNG header, or nullopt when not a readable PNG.
std::optional<std::pair<std::uint32_t, std::uint32_t>> png_dimensions(
    const std::filesystem::path& path);

}  // namespace docforge
