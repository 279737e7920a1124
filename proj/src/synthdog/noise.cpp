#include "docforge/synthdog/noise.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <opencv2/imgproc.hpp>

#include "docforge/synthdog/rng.hpp"

namespace docforge::synthdog {
namespace {

/// Hash-based lattice value noise in [-1, 1] with smoothstep interpolation.
/// Purely arithmetic, so identical on every platform.
double value_noise(std::uint64_t seed, double x, double y, double cell) {
  const double fx = x / cell;
  const double fy = y / cell;
  const long ix = long(std::floor(fx));
  const long iy = long(std::floor(fy));
  auto lattice = [&](long gx, long gy) {
    std::uint64_t h = mix64(seed ^ mix64(std::uint64_t(gx) * 0x8DA6B343ULL ^
                                         std::uint64_t(gy) * 0xD8163841ULL));
    return double(h >> 11) * 0x1.0p-53 * 2.0 - 1.0;
  };
  auto smooth = [](double t) { return t * t * (3.0 - 2.0 * t); };
  const double tx = smooth(fx - double(ix));
  const double ty = smooth(fy - double(iy));
  const double a = lattice(ix, iy);
  const double b = lattice(ix + 1, iy);
  const double c = lattice(ix, iy + 1);
  const double d = lattice(ix + 1, iy + 1);
  const double top = a + (b - a) * tx;
  const double bottom = c + (d - c) * tx;
  return top + (bottom - top) * ty;
}

unsigned char clamp8(double v) {
  return static_cast<unsigned char>(std::clamp(v, 0.0, 255.0));
}

}  // namespace

cv::Mat procedural_background(int w, int h, std::uint64_t seed) {
  Rng rng(mix64(seed));
  // Muted base colour via HSV so it never fights the page for contrast.
  cv::Mat hsv(1, 1, CV_8UC3,
              cv::Scalar(rng.uniform_int(0, 179), rng.uniform_int(40, 110),
                         rng.uniform_int(80, 160)));
  cv::Mat base_bgr;
  cv::cvtColor(hsv, base_bgr, cv::COLOR_HSV2BGR);
  const cv::Vec3b base = base_bgr.at<cv::Vec3b>(0, 0);

  const std::uint64_t n1 = rng.u64();
  const std::uint64_t n2 = rng.u64();
  cv::Mat out(h, w, CV_8UC3);
  for (int y = 0; y < h; ++y) {
    cv::Vec3b* row = out.ptr<cv::Vec3b>(y);
    for (int x = 0; x < w; ++x) {
      const double n = 18.0 * value_noise(n1, x, y, 96.0) +
                       7.0 * value_noise(n2, x, y, 23.0);
      for (int c = 0; c < 3; ++c) {
        row[x][c] = clamp8(double(base[c]) + n);
      }
    }
  }
  return out;
}

cv::Mat procedural_paper(int w, int h, std::uint64_t seed) {
  Rng rng(mix64(seed ^ 0xA5A5A5A5A5A5A5A5ULL));
  const double base = rng.uniform_int(235, 250);
  const std::uint64_t n1 = rng.u64();
  cv::Mat out(h, w, CV_8UC3);
  for (int y = 0; y < h; ++y) {
    cv::Vec3b* row = out.ptr<cv::Vec3b>(y);
    for (int x = 0; x < w; ++x) {
      const double n = 4.0 * value_noise(n1, x, y, 31.0);
      const unsigned char v = clamp8(base + n);
      row[x] = cv::Vec3b(v, v, v);
    }
  }
  return out;
}

}  // namespace docforge::synthdog
