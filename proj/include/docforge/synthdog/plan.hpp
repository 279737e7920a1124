#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "docforge/assets.hpp"
#include "docforge/corpus.hpp"
#include "docforge/synthdog/config.hpp"
#include "docforge/synthdog/fonts.hpp"

namespace docforge::synthdog {

enum class Align { Left, Center, Right };

struct TextLine {
  std::vector<std::string> words;
};

/// A filled paragraph box in document space (pre-warp pixels).
struct Region {
  double x = 0, y = 0, w = 0, h = 0;
  int font = 0;
  int font_px = 12;
  int line_height = 16;
  Align align = Align::Left;
  int gray = 20;  ///< ink level, 0 = black
  std::vector<TextLine> lines;
};

struct Effects {
  double blur_sigma = 0.0;
  double noise_stddev = 0.0;
  double brightness = 0.0;
  double contrast = 1.0;
  bool shadow = false;
  double shadow_angle = 0.0;
  double shadow_strength = 0.0;
  double shadow_width = 0.4;
  std::uint64_t noise_seed = 0;
};

struct Quad4 {
  std::array<std::array<double, 2>, 4> pts{};  ///< clockwise from top-left
};

/// Everything the renderer needs, decided up front from the per-image seed.
/// Rendering a plan twice gives byte-identical output.
struct RenderPlan {
  std::uint64_t seed = 0;
  int canvas_w = 0, canvas_h = 0;
  int doc_w = 0, doc_h = 0;
  Quad4 doc_quad;  ///< canvas-space destination of the document corners
  std::string background_id;  ///< asset id, empty = procedural
  std::string texture_id;     ///< asset id, empty = procedural
  std::vector<Region> regions;
  Effects effects;

  std::size_t word_count() const;
};

/// Loaded generation inputs, shared across worker threads.
struct Assets {
  CorpusSource corpus;
  AssetPool backgrounds;
  AssetPool textures;
  FontLibrary fonts;
};

Assets load_assets(const GenConfig& config);

/// Plans image `index`. Pure in (config, assets, index): no global state.
/// The plan always places at least one word.
RenderPlan make_plan(const GenConfig& config, const Assets& assets,
                     std::uint64_t index);

}  // namespace docforge::synthdog
