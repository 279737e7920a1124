#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>

namespace docforge::synthdog {

struct IntRange {
  int lo = 0;
  int hi = 0;
};

struct RealRange {
  double lo = 0.0;
  double hi = 0.0;
};

/// Sampling ranges and asset locations for the generator. Every knob is a
/// range; each image draws its own values from them. See configs/default.cfg
/// for the file syntax (`key = value` or `key = lo hi`).
struct GenConfig {
  IntRange canvas_width{480, 720};
  IntRange canvas_height{360, 560};
  IntRange columns{1, 3};
  IntRange line_height{16, 40};
  IntRange margin{14, 44};
  IntRange region_lines{1, 6};

  /// Relative weights for left/center/right paragraph alignment.
  std::array<double, 3> align_weights{0.6, 0.25, 0.15};

  RealRange blur_sigma{0.0, 1.2};
  RealRange noise_stddev{0.0, 7.0};
  RealRange perspective_jitter{0.0, 0.05};
  RealRange brightness{-20.0, 20.0};
  RealRange contrast{0.9, 1.1};
  double shadow_prob = 0.35;

  std::uint64_t seed = 0;

  std::filesystem::path corpus_dir;
  std::filesystem::path background_dir;
  std::filesystem::path texture_dir;
  std::filesystem::path font_dir;

  /// Throws Error(ConfigError) when a range is inverted or a value is
  /// outside its legal domain.
  void validate() const;
};

/// Parses a config file: one `key = value...` per line, `#` comments.
/// Unknown keys and malformed values throw Error(ConfigError).
GenConfig load_config(const std::filesystem::path& path);

/// Applies one `key=value` override (the CLI --set flag) on top of `config`.
void apply_override(GenConfig& config, const std::string& key,
                    const std::string& value);

}  // namespace docforge::synthdog
