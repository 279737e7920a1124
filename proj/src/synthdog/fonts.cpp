#include "docforge/synthdog/fonts.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include <opencv2/freetype.hpp>
#include <opencv2/imgproc.hpp>

#include "docforge/errors.hpp"

namespace docforge::synthdog {
namespace {

constexpr int kHersheyFace = cv::FONT_HERSHEY_SIMPLEX;

int hershey_thickness(int px) { return std::max(1, px / 14); }

double hershey_scale(int px) {
  return cv::getFontScaleFromHeight(kHersheyFace, px, hershey_thickness(px));
}

/// FreeType2 instances are not thread safe, so each thread keeps its own,
/// keyed by font path. Entries live for the thread's lifetime.
cv::Ptr<cv::freetype::FreeType2>& face_for(const std::filesystem::path& path) {
  thread_local std::map<std::string, cv::Ptr<cv::freetype::FreeType2>> cache;
  auto [it, inserted] = cache.try_emplace(path.string());
  if (inserted) {
    try {
      it->second = cv::freetype::createFreeType2();
      it->second->loadFontData(path.string(), 0);
    } catch (const cv::Exception& e) {
      cache.erase(it);
      throw Error(ErrorCode::ConfigError,
                  "cannot load font " + path.string() + ": " + e.err);
    }
  }
  return it->second;
}

bool printable_ascii(const std::string& word) {
  return std::all_of(word.begin(), word.end(), [](unsigned char c) {
    return c >= 0x20 && c <= 0x7E;
  });
}

cv::Rect ink_bounds(const cv::Mat& patch) {
  int x0 = patch.cols, x1 = -1, y0 = patch.rows, y1 = -1;
  for (int y = 0; y < patch.rows; ++y) {
    const unsigned char* row = patch.ptr<unsigned char>(y);
    for (int x = 0; x < patch.cols; ++x) {
      if (row[x] != 0) {
        x0 = std::min(x0, x);
        x1 = std::max(x1, x);
        y0 = std::min(y0, y);
        y1 = std::max(y1, y);
      }
    }
  }
  if (x1 < 0) {
    return cv::Rect();
  }
  return cv::Rect(x0, y0, x1 - x0 + 1, y1 - y0 + 1);
}

}  // namespace

FontLibrary::FontLibrary(AssetPool fonts) : pool_(std::move(fonts)) {}

int FontLibrary::count() const {
  return pool_.empty() ? 1 : int(pool_.size());
}

bool FontLibrary::is_builtin(int font) const {
  (void)font;
  return pool_.empty();
}

std::string FontLibrary::id(int font) const {
  return is_builtin(font) ? "builtin" : pool_.at(std::size_t(font)).id;
}

double FontLibrary::space_width(int px) const {
  return std::max(2.0, 0.32 * px);
}

double FontLibrary::measure(int font, int px, const std::string& word) const {
  if (is_builtin(font)) {
    return cv::getTextSize(word, kHersheyFace, hershey_scale(px),
                           hershey_thickness(px), nullptr)
        .width;
  }
  auto& face = face_for(pool_.at(std::size_t(font)).path);
  int baseline = 0;
  return face->getTextSize(word, px, -1, &baseline).width;
}

WordRaster FontLibrary::rasterize(int font, int px, const std::string& word) const {
  const int pad = std::max(4, px);
  const int width = int(std::ceil(measure(font, px, word))) + 2 * pad;
  const int height = 4 * px + 2 * pad;
  const cv::Point pen(pad, 2 * px + pad);  // generous; the crop below fixes up
  cv::Mat patch = cv::Mat::zeros(height, width, CV_8UC1);
  if (is_builtin(font)) {
    cv::putText(patch, word, pen, kHersheyFace, hershey_scale(px),
                cv::Scalar(255), hershey_thickness(px), cv::LINE_AA);
  } else {
    auto& face = face_for(pool_.at(std::size_t(font)).path);
    face->putText(patch, word, pen, px, cv::Scalar(255), -1, cv::LINE_AA, true);
  }
  cv::Rect box = ink_bounds(patch);
  WordRaster raster;
  if (box.width == 0) {
    return raster;
  }
  raster.coverage = patch(box).clone();
  raster.dx = box.x - pen.x;
  raster.dy = box.y - pen.y;
  return raster;
}

bool FontLibrary::renderable(int font, const std::string& word) const {
  if (word.empty()) {
    return false;
  }
  if (is_builtin(font)) {
    return printable_ascii(word);
  }
  // Probe the actual outlines once per (font, word); fonts with no glyph for
  // a codepoint would otherwise yield blank ink and degenerate boxes.
  thread_local std::map<std::pair<int, std::string>, bool> cache;
  auto key = std::make_pair(font, word);
  auto it = cache.find(key);
  if (it != cache.end()) {
    return it->second;
  }
  bool ok = false;
  try {
    ok = !rasterize(font, 16, word).empty();
  } catch (const cv::Exception&) {
    ok = false;
  }
  cache.emplace(std::move(key), ok);
  return ok;
}

}  // namespace docforge::synthdog
