#include "docforge/synthdog/render.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <opencv2/imgcodecs.hpp>
#include <opencv2/imgproc.hpp>

#include "docforge/codec.hpp"
#include "docforge/errors.hpp"
#include "docforge/synthdog/noise.hpp"
#include "docforge/synthdog/rng.hpp"

namespace docforge::synthdog {
namespace {

constexpr int kRegionPad = 4;
constexpr int kInnerPad = 3;

cv::Mat load_cover(const std::filesystem::path& path, int w, int h) {
  cv::Mat img = cv::imread(path.string(), cv::IMREAD_COLOR);
  if (img.empty()) {
    throw Error(ErrorCode::AssetMissing, "cannot read image " + path.string());
  }
  const double scale = std::max(double(w) / img.cols, double(h) / img.rows);
  cv::Mat resized;
  cv::resize(img, resized, cv::Size(), scale, scale, cv::INTER_AREA);
  const int x0 = std::max(0, (resized.cols - w) / 2);
  const int y0 = std::max(0, (resized.rows - h) / 2);
  return resized(cv::Rect(x0, y0, w, h)).clone();
}

void blend_ink(cv::Mat& doc, const cv::Mat& coverage, int x0, int y0,
               int gray) {
  const cv::Rect target =
      cv::Rect(x0, y0, coverage.cols, coverage.rows) &
      cv::Rect(0, 0, doc.cols, doc.rows);
  for (int y = target.y; y < target.y + target.height; ++y) {
    cv::Vec3b* row = doc.ptr<cv::Vec3b>(y);
    const unsigned char* cov = coverage.ptr<unsigned char>(y - y0);
    for (int x = target.x; x < target.x + target.width; ++x) {
      const int a = cov[x - x0];
      if (a == 0) {
        continue;
      }
      for (int c = 0; c < 3; ++c) {
        row[x][c] = static_cast<unsigned char>(
            (row[x][c] * (255 - a) + gray * a + 127) / 255);
      }
    }
  }
}

struct PlacedWord {
  std::string text;
  cv::Rect box;  ///< tight ink box in document space
  int region = 0;
  int line = 0;
};

std::array<std::array<double, 2>, 4> map_box(const cv::Mat& H,
                                             const cv::Rect& box, int canvas_w,
                                             int canvas_h) {
  auto apply = [&](double x, double y) -> std::array<double, 2> {
    const double w = H.at<double>(2, 0) * x + H.at<double>(2, 1) * y +
                     H.at<double>(2, 2);
    const double px = (H.at<double>(0, 0) * x + H.at<double>(0, 1) * y +
                       H.at<double>(0, 2)) /
                      w;
    const double py = (H.at<double>(1, 0) * x + H.at<double>(1, 1) * y +
                       H.at<double>(1, 2)) /
                      w;
    return {std::clamp(px, 0.0, double(canvas_w)),
            std::clamp(py, 0.0, double(canvas_h))};
  };
  const double x0 = box.x, y0 = box.y;
  const double x1 = box.x + box.width, y1 = box.y + box.height;
  return {apply(x0, y0), apply(x1, y0), apply(x1, y1), apply(x0, y1)};
}

double quad_left(const std::array<std::array<double, 2>, 4>& q) {
  return std::min(std::min(q[0][0], q[1][0]), std::min(q[2][0], q[3][0]));
}

double quad_top(const std::array<std::array<double, 2>, 4>& q) {
  return std::min(std::min(q[0][1], q[1][1]), std::min(q[2][1], q[3][1]));
}

void apply_noise(cv::Mat& img, double stddev, std::uint64_t seed) {
  Rng rng(seed);
  for (int y = 0; y < img.rows; ++y) {
    cv::Vec3b* row = img.ptr<cv::Vec3b>(y);
    for (int x = 0; x < img.cols; ++x) {
      // Luminance noise: one draw shared by the three channels.
      const double n = rng.normal(0.0, stddev);
      for (int c = 0; c < 3; ++c) {
        row[x][c] = static_cast<unsigned char>(
            std::clamp(double(row[x][c]) + n, 0.0, 255.0));
      }
    }
  }
}

void apply_shadow(cv::Mat& img, const Effects& fx) {
  const double dx = std::cos(fx.shadow_angle);
  const double dy = std::sin(fx.shadow_angle);
  // Signed extent of the canvas along the shadow direction.
  double lo = 1e30, hi = -1e30;
  for (int cy = 0; cy < 2; ++cy) {
    for (int cx = 0; cx < 2; ++cx) {
      const double d = dx * (cx * (img.cols - 1)) + dy * (cy * (img.rows - 1));
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
  }
  const double span = std::max(1e-9, hi - lo);
  const double start = 1.0 - fx.shadow_width;
  for (int y = 0; y < img.rows; ++y) {
    cv::Vec3b* row = img.ptr<cv::Vec3b>(y);
    for (int x = 0; x < img.cols; ++x) {
      const double proj = (dx * x + dy * y - lo) / span;
      double t = (proj - start) / fx.shadow_width;
      t = std::clamp(t, 0.0, 1.0);
      t = t * t * (3.0 - 2.0 * t);
      const double factor = 1.0 - fx.shadow_strength * t;
      for (int c = 0; c < 3; ++c) {
        row[x][c] = static_cast<unsigned char>(
            std::clamp(double(row[x][c]) * factor, 0.0, 255.0));
      }
    }
  }
}

}  // namespace

RenderResult render(const RenderPlan& plan, const Assets& assets) {
  // Document sheet in flat (pre-warp) space.
  cv::Mat doc = plan.texture_id.empty()
                    ? procedural_paper(plan.doc_w, plan.doc_h, plan.seed)
                    : load_cover(assets.textures.resolve(plan.texture_id),
                                 plan.doc_w, plan.doc_h);

  std::vector<PlacedWord> placed;
  for (std::size_t r = 0; r < plan.regions.size(); ++r) {
    const Region& region = plan.regions[r];
    const double budget = region.w - 2 * kInnerPad;
    const double space = assets.fonts.space_width(region.font_px);
    for (std::size_t l = 0; l < region.lines.size(); ++l) {
      const TextLine& line = region.lines[l];
      std::vector<double> widths(line.words.size());
      double line_w = 0.0;
      for (std::size_t w = 0; w < line.words.size(); ++w) {
        widths[w] = assets.fonts.measure(region.font, region.font_px,
                                         line.words[w]);
        line_w += widths[w] + (w > 0 ? space : 0.0);
      }
      double start_x = region.x + kInnerPad;
      if (region.align == Align::Center) {
        start_x += std::max(0.0, (budget - line_w) / 2.0);
      } else if (region.align == Align::Right) {
        start_x += std::max(0.0, budget - line_w);
      }
      const int line_top =
          int(region.y) + kRegionPad / 2 + int(l) * region.line_height;
      const int baseline =
          line_top + int(std::lround(0.78 * region.line_height));
      double pen = start_x;
      for (std::size_t w = 0; w < line.words.size(); ++w) {
        WordRaster raster = assets.fonts.rasterize(region.font, region.font_px,
                                                   line.words[w]);
        if (!raster.empty()) {
          const int bx = int(std::lround(pen)) + raster.dx;
          const int by = baseline + raster.dy;
          const cv::Rect tight =
              cv::Rect(bx, by, raster.coverage.cols, raster.coverage.rows) &
              cv::Rect(0, 0, doc.cols, doc.rows);
          if (tight.width > 0 && tight.height > 0) {
            blend_ink(doc, raster.coverage, bx, by, region.gray);
            placed.push_back({line.words[w], tight, int(r), int(l)});
          }
        }
        pen += widths[w] + space;
      }
    }
  }

  // Composite the warped sheet over the backdrop.
  cv::Mat canvas =
      plan.background_id.empty()
          ? procedural_background(plan.canvas_w, plan.canvas_h,
                                  plan.seed ^ 0xC0FFEE1234567890ULL)
          : load_cover(assets.backgrounds.resolve(plan.background_id),
                       plan.canvas_w, plan.canvas_h);

  const cv::Point2f src[4] = {
      {0.f, 0.f},
      {float(plan.doc_w), 0.f},
      {float(plan.doc_w), float(plan.doc_h)},
      {0.f, float(plan.doc_h)}};
  const cv::Point2f dst[4] = {
      {float(plan.doc_quad.pts[0][0]), float(plan.doc_quad.pts[0][1])},
      {float(plan.doc_quad.pts[1][0]), float(plan.doc_quad.pts[1][1])},
      {float(plan.doc_quad.pts[2][0]), float(plan.doc_quad.pts[2][1])},
      {float(plan.doc_quad.pts[3][0]), float(plan.doc_quad.pts[3][1])}};
  const cv::Mat H = cv::getPerspectiveTransform(src, dst);

  cv::Mat warped, mask_warped;
  cv::warpPerspective(doc, warped, H, cv::Size(plan.canvas_w, plan.canvas_h),
                      cv::INTER_LINEAR, cv::BORDER_CONSTANT);
  cv::Mat mask(plan.doc_h, plan.doc_w, CV_8UC1, cv::Scalar(255));
  cv::warpPerspective(mask, mask_warped, H,
                      cv::Size(plan.canvas_w, plan.canvas_h), cv::INTER_LINEAR,
                      cv::BORDER_CONSTANT);
  for (int y = 0; y < canvas.rows; ++y) {
    cv::Vec3b* out = canvas.ptr<cv::Vec3b>(y);
    const cv::Vec3b* top = warped.ptr<cv::Vec3b>(y);
    const unsigned char* m = mask_warped.ptr<unsigned char>(y);
    for (int x = 0; x < canvas.cols; ++x) {
      if (m[x] == 0) {
        continue;
      }
      for (int c = 0; c < 3; ++c) {
        out[x][c] = static_cast<unsigned char>(
            (out[x][c] * (255 - m[x]) + top[x][c] * m[x] + 127) / 255);
      }
    }
  }

  const Effects& fx = plan.effects;
  if (fx.blur_sigma >= 0.05) {
    const int k = 2 * int(std::ceil(3.0 * fx.blur_sigma)) + 1;
    cv::GaussianBlur(canvas, canvas, cv::Size(k, k), fx.blur_sigma,
                     fx.blur_sigma);
  }
  canvas.convertTo(canvas, -1, fx.contrast, fx.brightness);
  if (fx.noise_stddev >= 0.05) {
    apply_noise(canvas, fx.noise_stddev, fx.noise_seed);
  }
  if (fx.shadow) {
    apply_shadow(canvas, fx);
  }

  // Reading order is decided on the final image: regions by the top-left of
  // their projected boxes, lines top to bottom, words left to right.
  struct Mapped {
    std::array<std::array<double, 2>, 4> quad;
    const PlacedWord* word;
  };
  std::vector<Mapped> mapped(placed.size());
  for (std::size_t i = 0; i < placed.size(); ++i) {
    mapped[i] = {map_box(H, placed[i].box, plan.canvas_w, plan.canvas_h),
                 &placed[i]};
  }

  std::vector<std::vector<std::vector<std::size_t>>> by_region;
  for (std::size_t i = 0; i < mapped.size(); ++i) {
    const auto& pw = *mapped[i].word;
    if (by_region.size() <= std::size_t(pw.region)) {
      by_region.resize(pw.region + 1);
    }
    auto& lines = by_region[pw.region];
    if (lines.size() <= std::size_t(pw.line)) {
      lines.resize(pw.line + 1);
    }
    lines[pw.line].push_back(i);
  }
  // Drop empty region/line slots left by words that failed to place.
  for (auto& lines : by_region) {
    lines.erase(std::remove_if(lines.begin(), lines.end(),
                               [](const auto& l) { return l.empty(); }),
                lines.end());
  }
  by_region.erase(std::remove_if(by_region.begin(), by_region.end(),
                                 [](const auto& r) { return r.empty(); }),
                  by_region.end());

  auto line_top = [&](const std::vector<std::size_t>& line) {
    double top = 1e30;
    for (std::size_t i : line) {
      top = std::min(top, quad_top(mapped[i].quad));
    }
    return top;
  };
  auto region_key = [&](const std::vector<std::vector<std::size_t>>& lines) {
    double top = 1e30, left = 1e30;
    for (const auto& line : lines) {
      for (std::size_t i : line) {
        top = std::min(top, quad_top(mapped[i].quad));
        left = std::min(left, quad_left(mapped[i].quad));
      }
    }
    return std::make_pair(top, left);
  };

  for (auto& lines : by_region) {
    for (auto& line : lines) {
      std::stable_sort(line.begin(), line.end(),
                       [&](std::size_t a, std::size_t b) {
                         return quad_left(mapped[a].quad) <
                                quad_left(mapped[b].quad);
                       });
    }
    std::stable_sort(lines.begin(), lines.end(),
                     [&](const auto& a, const auto& b) {
                       return line_top(a) < line_top(b);
                     });
  }
  std::stable_sort(by_region.begin(), by_region.end(),
                   [&](const auto& a, const auto& b) {
                     return region_key(a) < region_key(b);
                   });

  RenderResult result;
  result.image = canvas;
  std::string& text = result.annotation.text_sequence;
  for (std::size_t r = 0; r < by_region.size(); ++r) {
    for (std::size_t l = 0; l < by_region[r].size(); ++l) {
      for (std::size_t i : by_region[r][l]) {
        WordRecord record;
        record.text = mapped[i].word->text;
        record.quad = mapped[i].quad;
        record.region = int(r);
        record.line = int(l);
        if (!text.empty()) {
          text += ' ';
        }
        text += record.text;
        result.annotation.words.push_back(std::move(record));
      }
    }
  }
  result.annotation.gt_parse.root.emplace_back("text_sequence", Value(text));
  static const Vocab generator_vocab({"text_sequence"});
  result.annotation.target = encode(result.annotation.gt_parse, generator_vocab);
  return result;
}

bool reading_order_consistent(const Annotation& annotation) {
  // Rebuild the region/line grouping from the stored indices; stored order
  // must visit regions and lines as contiguous, increasing blocks.
  std::vector<std::vector<std::vector<const WordRecord*>>> regions;
  int last_region = -1, last_line = -1;
  for (const auto& word : annotation.words) {
    if (word.region != last_region) {
      if (word.region != int(regions.size())) {
        return false;
      }
      regions.emplace_back();
      last_region = word.region;
      last_line = -1;
    }
    auto& lines = regions.back();
    if (word.line != last_line) {
      if (word.line != int(lines.size())) {
        return false;
      }
      lines.emplace_back();
      last_line = word.line;
    }
    lines.back().push_back(&word);
  }

  auto quad_left = [](const WordRecord& w) {
    double v = 1e30;
    for (const auto& pt : w.quad) {
      v = std::min(v, pt[0]);
    }
    return v;
  };
  auto quad_top = [](const WordRecord& w) {
    double v = 1e30;
    for (const auto& pt : w.quad) {
      v = std::min(v, pt[1]);
    }
    return v;
  };

  std::string joined;
  std::vector<std::pair<double, double>> region_keys;
  for (const auto& lines : regions) {
    double rtop = 1e30, rleft = 1e30;
    std::vector<double> line_tops;
    for (const auto& line : lines) {
      double ltop = 1e30;
      double prev_left = -1e30;
      for (const WordRecord* w : line) {
        if (!joined.empty()) {
          joined += ' ';
        }
        joined += w->text;
        const double left = quad_left(*w);
        if (left < prev_left) {
          return false;  // words out of left-to-right order
        }
        prev_left = left;
        ltop = std::min(ltop, quad_top(*w));
        rtop = std::min(rtop, quad_top(*w));
        rleft = std::min(rleft, left);
      }
      line_tops.push_back(ltop);
    }
    if (!std::is_sorted(line_tops.begin(), line_tops.end())) {
      return false;  // lines out of top-to-bottom order
    }
    region_keys.emplace_back(rtop, rleft);
  }
  if (!std::is_sorted(region_keys.begin(), region_keys.end())) {
    return false;  // regions out of top-left order
  }
  return joined == annotation.text_sequence;
}

std::vector<unsigned char> encode_png(const cv::Mat& image) {
  std::vector<unsigned char> bytes;
  if (!cv::imencode(".png", image, bytes,
                    {cv::IMWRITE_PNG_COMPRESSION, 6})) {
    throw Error(ErrorCode::IoError, "png encoding failed");
  }
  return bytes;
}

}  // namespace docforge::synthdog
