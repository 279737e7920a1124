#include "docforge/synthdog/plan.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "docforge/errors.hpp"
#include "docforge/synthdog/rng.hpp"

namespace docforge::synthdog {
namespace {

constexpr int kMinColumnWidth = 90;
constexpr int kRegionPad = 4;
constexpr int kInnerPad = 3;

/// Feeds the layout contiguous runs of corpus words so neighbouring words on
/// a page come from the same source passage.
class WordStream {
 public:
  WordStream(const CorpusSource& corpus, const FontLibrary& fonts, int font,
             Rng& rng)
      : corpus_(corpus), fonts_(fonts), font_(font), rng_(rng) {}

  const std::string& peek() {
    refill();
    return pending_.front();
  }

  std::string take() {
    refill();
    std::string word = std::move(pending_.front());
    pending_.pop_front();
    return word;
  }

 private:
  void refill() {
    int attempts = 0;
    while (pending_.empty()) {
      const auto& doc = corpus_.documents[rng_.pick(corpus_.documents.size())];
      const std::size_t run =
          1 + rng_.pick(std::min<std::size_t>(8, doc.size()));
      const std::size_t start = rng_.pick(doc.size());
      for (std::size_t i = 0; i < run; ++i) {
        const std::string& word = doc[(start + i) % doc.size()];
        if (fonts_.renderable(font_, word)) {
          pending_.push_back(word);
        }
      }
      // A corpus whose script the font cannot draw at all must not spin
      // forever; fall back to a letter every font can handle.
      if (++attempts > 64 && pending_.empty()) {
        pending_.push_back("a");
      }
    }
  }

  const CorpusSource& corpus_;
  const FontLibrary& fonts_;
  int font_;
  Rng& rng_;
  std::deque<std::string> pending_;
};

Align pick_align(const std::array<double, 3>& weights, Rng& rng) {
  const double total = weights[0] + weights[1] + weights[2];
  const double r = rng.uniform_real(0.0, total);
  if (r < weights[0]) {
    return Align::Left;
  }
  if (r < weights[0] + weights[1]) {
    return Align::Center;
  }
  return Align::Right;
}

bool convex(const Quad4& q) {
  for (int i = 0; i < 4; ++i) {
    const auto& a = q.pts[i];
    const auto& b = q.pts[(i + 1) % 4];
    const auto& c = q.pts[(i + 2) % 4];
    const double cross = (b[0] - a[0]) * (c[1] - b[1]) -
                         (b[1] - a[1]) * (c[0] - b[0]);
    if (cross <= 0.0) {  // clockwise on a y-down canvas keeps cross > 0
      return false;
    }
  }
  return true;
}

Quad4 sample_doc_quad(Rng& rng, double jitter_frac, double x0, double y0,
                      double w, double h) {
  const double amp = jitter_frac * std::min(w, h);
  for (int attempt = 0; attempt < 8; ++attempt) {
    Quad4 q;
    // Corners move inward only, so the page stays inside the canvas.
    q.pts[0] = {x0 + rng.uniform_real(0, amp), y0 + rng.uniform_real(0, amp)};
    q.pts[1] = {x0 + w - rng.uniform_real(0, amp),
                y0 + rng.uniform_real(0, amp)};
    q.pts[2] = {x0 + w - rng.uniform_real(0, amp),
                y0 + h - rng.uniform_real(0, amp)};
    q.pts[3] = {x0 + rng.uniform_real(0, amp),
                y0 + h - rng.uniform_real(0, amp)};
    if (convex(q)) {
      return q;
    }
  }
  Quad4 q;
  q.pts = {{{x0, y0}, {x0 + w, y0}, {x0 + w, y0 + h}, {x0, y0 + h}}};
  return q;
}

void fill_region(Region& region, WordStream& stream, const FontLibrary& fonts,
                 int lines_n) {
  const double budget = region.w - 2 * kInnerPad;
  const double space = fonts.space_width(region.font_px);
  for (int l = 0; l < lines_n; ++l) {
    TextLine line;
    double pen = 0.0;
    int skipped = 0;
    while (true) {
      const std::string& word = stream.peek();
      const double width = fonts.measure(region.font, region.font_px, word);
      if (line.words.empty()) {
        if (width > budget) {
          stream.take();  // drop: wider than any line in this region
          if (++skipped > 25) {
            break;
          }
          continue;
        }
        pen = width;
        line.words.push_back(stream.take());
        continue;
      }
      if (pen + space + width <= budget) {
        pen += space + width;
        line.words.push_back(stream.take());
      } else {
        break;
      }
    }
    if (!line.words.empty()) {
      region.lines.push_back(std::move(line));
    }
  }
}

/// Last-resort fill when sampled geometry produced an empty page: one small
/// word, shrinking the font until it fits.
void force_one_word(RenderPlan& plan, const Assets& assets, Rng& rng) {
  const auto& docs = assets.corpus.documents;
  std::string word = "a";
  for (const auto& doc : docs) {
    for (const auto& candidate : doc) {
      if (assets.fonts.renderable(0, candidate) &&
          (word == "a" || candidate.size() < word.size())) {
        word = candidate;
      }
    }
    break;  // first document is enough; this path is already degenerate
  }
  const double budget = plan.doc_w * 0.6;
  for (int px = 14; px >= 6; px -= 2) {
    if (assets.fonts.measure(0, px, word) <= budget) {
      Region region;
      region.x = plan.doc_w * 0.2;
      region.y = plan.doc_h * 0.2;
      region.w = plan.doc_w * 0.6;
      region.h = px * 2 + kRegionPad;
      region.font = 0;
      region.font_px = px;
      region.line_height = px * 2;
      region.align = Align::Left;
      region.gray = rng.uniform_int(0, 60);
      region.lines.push_back(TextLine{{word}});
      plan.regions.push_back(std::move(region));
      return;
    }
  }
}

}  // namespace

std::size_t RenderPlan::word_count() const {
  std::size_t n = 0;
  for (const auto& region : regions) {
    for (const auto& line : region.lines) {
      n += line.words.size();
    }
  }
  return n;
}

Assets load_assets(const GenConfig& config) {
  config.validate();
  return Assets{load_corpus_dir(config.corpus_dir),
                AssetPool::scan(AssetKind::Background, config.background_dir),
                AssetPool::scan(AssetKind::Texture, config.texture_dir),
                FontLibrary(AssetPool::scan(AssetKind::Font, config.font_dir))};
}

RenderPlan make_plan(const GenConfig& config, const Assets& assets,
                     std::uint64_t index) {
  if (assets.corpus.empty()) {
    throw Error(ErrorCode::EmptyPool, "corpus has no documents");
  }
  Rng rng(derive_seed(config.seed, index));

  RenderPlan plan;
  plan.seed = derive_seed(config.seed, index);
  plan.canvas_w = rng.uniform_int(config.canvas_width.lo, config.canvas_width.hi);
  plan.canvas_h =
      rng.uniform_int(config.canvas_height.lo, config.canvas_height.hi);

  plan.background_id =
      assets.backgrounds.empty()
          ? std::string()
          : assets.backgrounds.at(rng.pick(assets.backgrounds.size())).id;
  plan.texture_id =
      assets.textures.empty()
          ? std::string()
          : assets.textures.at(rng.pick(assets.textures.size())).id;

  const int inset_x =
      int(std::lround(plan.canvas_w * rng.uniform_real(0.03, 0.08)));
  const int inset_y =
      int(std::lround(plan.canvas_h * rng.uniform_real(0.03, 0.08)));
  plan.doc_w = plan.canvas_w - 2 * inset_x;
  plan.doc_h = plan.canvas_h - 2 * inset_y;
  const double jitter =
      rng.uniform_real(config.perspective_jitter.lo, config.perspective_jitter.hi);
  plan.doc_quad = sample_doc_quad(rng, jitter, inset_x, inset_y, plan.doc_w,
                                  plan.doc_h);

  // Guillotine layout: pick columns, then stack paragraph regions in each.
  const int margin = std::clamp(rng.uniform_int(config.margin.lo, config.margin.hi),
                                2, std::min(plan.doc_w, plan.doc_h) / 5);
  const int gutter = std::max(8, margin / 2);
  const int requested_cols = rng.uniform_int(config.columns.lo, config.columns.hi);
  const int usable_w = plan.doc_w - 2 * margin;
  const int fit_cols = std::max(1, (usable_w + gutter) / (kMinColumnWidth + gutter));
  const int cols = std::max(1, std::min(requested_cols, fit_cols));
  const int col_w = (usable_w - (cols - 1) * gutter) / cols;

  for (int c = 0; c < cols; ++c) {
    const int x = margin + c * (col_w + gutter);
    int y = margin;
    while (true) {
      const int line_h = rng.uniform_int(config.line_height.lo, config.line_height.hi);
      const int lines_req =
          rng.uniform_int(config.region_lines.lo, config.region_lines.hi);
      const int avail = plan.doc_h - margin - y;
      const int max_lines = (avail - kRegionPad) / line_h;
      const int lines_n = std::min(lines_req, max_lines);
      if (lines_n < 1) {
        break;
      }
      Region region;
      region.x = x;
      region.y = y;
      region.w = col_w;
      region.h = lines_n * line_h + kRegionPad;
      region.font = int(rng.pick(std::size_t(assets.fonts.count())));
      region.font_px = std::clamp(int(std::lround(line_h * 0.72)), 8, 96);
      region.line_height = line_h;
      region.align = pick_align(config.align_weights, rng);
      region.gray = rng.uniform_int(0, 60);

      WordStream stream(assets.corpus, assets.fonts, region.font, rng);
      fill_region(region, stream, assets.fonts, lines_n);
      if (!region.lines.empty()) {
        plan.regions.push_back(std::move(region));
      }
      y += lines_n * line_h + kRegionPad + rng.uniform_int(8, 22);
      if (y >= plan.doc_h - margin - 8) {
        break;
      }
    }
  }

  if (plan.word_count() == 0) {
    force_one_word(plan, assets, rng);
  }

  plan.effects.blur_sigma =
      rng.uniform_real(config.blur_sigma.lo, config.blur_sigma.hi);
  plan.effects.noise_stddev =
      rng.uniform_real(config.noise_stddev.lo, config.noise_stddev.hi);
  plan.effects.brightness =
      rng.uniform_real(config.brightness.lo, config.brightness.hi);
  plan.effects.contrast =
      rng.uniform_real(config.contrast.lo, config.contrast.hi);
  plan.effects.shadow = rng.bernoulli(config.shadow_prob);
  plan.effects.shadow_angle = rng.uniform_real(0.0, 6.283185307179586);
  plan.effects.shadow_strength = rng.uniform_real(0.15, 0.4);
  plan.effects.shadow_width = rng.uniform_real(0.25, 0.6);
  plan.effects.noise_seed = rng.u64();
  return plan;
}

}  // namespace docforge::synthdog
