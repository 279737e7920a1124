#pragma once

#include <cstdint>

#include <opencv2/core.hpp>

namespace docforge::synthdog {

/// Procedural stand-in for a photo backdrop: a muted colour field with two
/// octaves of value noise. Deterministic in (w, h, seed).
cv::Mat procedural_background(int w, int h, std::uint64_t seed);

/// Procedural paper: off-white with faint grain. Deterministic in (w, h,
/// seed).
cv::Mat procedural_paper(int w, int h, std::uint64_t seed);

}  // namespace docforge::synthdog
