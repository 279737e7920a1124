#pragma once

#include <string>

#include <opencv2/core.hpp>

#include "docforge/assets.hpp"

namespace docforge::synthdog {

/// A word rendered to a tight 8-bit coverage patch (255 = full ink).
/// Blit the patch with its top-left corner at (pen_x + dx, baseline_y + dy);
/// dx/dy come from the measured ink extents, so the patch bounds ARE the
/// word's tight box regardless of font metrics.
struct WordRaster {
  cv::Mat coverage;
  int dx = 0;
  int dy = 0;

  bool empty() const { return coverage.empty(); }
};

/// Uniform view over the configured font files plus the built-in stroke font
/// used when no fonts are configured. Index-addressed so plans can reference
/// fonts stably. Rasterization state is kept per thread; const methods are
/// safe to call concurrently.
class FontLibrary {
 public:
  explicit FontLibrary(AssetPool fonts);

  int count() const;
  std::string id(int font) const;
  bool is_builtin(int font) const;

  /// False when the font cannot draw the word (the built-in stroke font only
  /// covers printable ASCII). Such words are re-sampled at plan time.
  bool renderable(int font, const std::string& word) const;

  /// Pen advance width in pixels at the given height.
  double measure(int font, int px, const std::string& word) const;

  /// Width of the inter-word gap at the given height.
  double space_width(int px) const;

  WordRaster rasterize(int font, int px, const std::string& word) const;

  const AssetPool& pool() const { return pool_; }

 private:
  AssetPool pool_;
};

}  // namespace docforge::synthdog
