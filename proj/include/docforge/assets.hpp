#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace docforge {

enum class AssetKind { Background, Texture, Font };

struct AssetEntry {
  std::string id;  ///< file name relative to the pool directory
  std::filesystem::path path;
};

/// A fixed set of image or font files discovered once at startup. Entries are
/// sorted by id, so sampling by index is reproducible across runs and
/// platforms.
class AssetPool {
 public:
  AssetPool() = default;
  AssetPool(AssetKind kind, std::vector<AssetEntry> entries);

  /// Scans `dir` (non-recursively) for files with an extension accepted for
  /// `kind`. An empty `dir` yields an empty pool; a missing directory throws
  /// Error(ConfigError).
  static AssetPool scan(AssetKind kind, const std::filesystem::path& dir);

  AssetKind kind() const { return kind_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const AssetEntry& at(std::size_t index) const;

  /// Path for an id recorded in a plan. Throws Error(AssetMissing) when the
  /// id is no longer present.
  const std::filesystem::path& resolve(const std::string& id) const;

 private:
  AssetKind kind_ = AssetKind::Background;
  std::vector<AssetEntry> entries_;
};

const char* asset_kind_name(AssetKind kind);

}  // namespace docforge
