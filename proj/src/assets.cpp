#include "docforge/assets.hpp"

#include <algorithm>
#include <array>

#include "docforge/errors.hpp"
#include "docforge/unicode.hpp"

namespace docforge {
namespace {

bool accepted_extension(AssetKind kind, std::string ext) {
  ext = to_lower_ascii(std::move(ext));
  static const std::array<const char*, 4> image = {".png", ".jpg", ".jpeg",
                                                   ".bmp"};
  static const std::array<const char*, 3> font = {".ttf", ".otf", ".ttc"};
  if (kind == AssetKind::Font) {
    return std::find(font.begin(), font.end(), ext) != font.end();
  }
  return std::find(image.begin(), image.end(), ext) != image.end();
}

}  // namespace

const char* asset_kind_name(AssetKind kind) {
  switch (kind) {
    case AssetKind::Background:
      return "background";
    case AssetKind::Texture:
      return "texture";
    case AssetKind::Font:
      return "font";
  }
  return "?";
}

AssetPool::AssetPool(AssetKind kind, std::vector<AssetEntry> entries)
    : kind_(kind), entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(),
            [](const AssetEntry& a, const AssetEntry& b) { return a.id < b.id; });
}

AssetPool AssetPool::scan(AssetKind kind, const std::filesystem::path& dir) {
  if (dir.empty()) {
    return AssetPool(kind, {});
  }
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    throw Error(ErrorCode::ConfigError,
                std::string(asset_kind_name(kind)) +
                    " directory not found: " + dir.string());
  }
  std::vector<AssetEntry> entries;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file()) {
      continue;
    }
    if (accepted_extension(kind, entry.path().extension().string())) {
      entries.push_back({entry.path().filename().string(), entry.path()});
    }
  }
  return AssetPool(kind, std::move(entries));
}

const AssetEntry& AssetPool::at(std::size_t index) const {
  if (index >= entries_.size()) {
    throw Error(ErrorCode::EmptyPool,
                std::string(asset_kind_name(kind_)) + " pool index out of range");
  }
  return entries_[index];
}

const std::filesystem::path& AssetPool::resolve(const std::string& id) const {
  for (const auto& entry : entries_) {
    if (entry.id == id) {
      return entry.path;
    }
  }
  throw Error(ErrorCode::AssetMissing, std::string(asset_kind_name(kind_)) +
                                           " asset missing: " + id);
}

}  // namespace docforge
