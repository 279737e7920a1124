#pragma once

#include <string>
#include <vector>

#include <opencv2/core.hpp>

#include "docforge/doctree.hpp"
#include "docforge/manifest.hpp"
#include "docforge/synthdog/plan.hpp"
#include "docforge/tokens.hpp"

namespace docforge::synthdog {

/// Ground truth for one rendered page. `words` is in reading order: regions
/// by top-then-left position of their boxes in the final image, lines top to
/// bottom, words left to right. `text_sequence` joins the same order with
/// single spaces and equals the text leaf in `gt_parse`.
struct Annotation {
  std::string text_sequence;
  DocTree gt_parse;
  TokenSeq target;  ///< always equals encode(gt_parse)
  std::vector<WordRecord> words;
};

struct RenderResult {
  cv::Mat image;  ///< 8-bit BGR
  Annotation annotation;
};

/// Renders a plan. Deterministic: equal plans give byte-identical images and
/// annotations. Throws Error(AssetMissing) when a referenced asset id has
/// disappeared from its pool.
RenderResult render(const RenderPlan& plan, const Assets& assets);

/// Re-derives reading order from the stored quads and region/line indices and
/// checks it matches the stored word order, and that text_sequence matches
/// the words.
bool reading_order_consistent(const Annotation& annotation);

/// PNG bytes for an 8-bit BGR image.
std::vector<unsigned char> encode_png(const cv::Mat& image);

}  // namespace docforge::synthdog
