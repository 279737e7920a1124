#include "docforge/synthdog/config.hpp"

#include <cctype>
#include <charconv>
#include <functional>
#include <map>
#include <sstream>
#include <vector>

#include "docforge/errors.hpp"
#include "docforge/json_io.hpp"
#include "docforge/unicode.hpp"

namespace docforge::synthdog {
namespace {

[[noreturn]] void bad(const std::string& key, const std::string& why) {
  throw Error(ErrorCode::ConfigError, "config key \"" + key + "\": " + why);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) {
    out.push_back(tok);
  }
  return out;
}

double parse_real(const std::string& key, const std::string& tok) {
  try {
    std::size_t used = 0;
    double v = std::stod(tok, &used);
    if (used != tok.size()) {
      bad(key, "trailing characters in number \"" + tok + "\"");
    }
    return v;
  } catch (const std::logic_error&) {
    bad(key, "not a number: \"" + tok + "\"");
  }
}

long long parse_int(const std::string& key, const std::string& tok) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    bad(key, "not an integer: \"" + tok + "\"");
  }
  return v;
}

using Setter = std::function<void(GenConfig&, const std::string& key,
                                  const std::string& raw)>;

Setter int_range(IntRange GenConfig::* member) {
  return [member](GenConfig& c, const std::string& key, const std::string& raw) {
    auto toks = split_ws(raw);
    if (toks.empty() || toks.size() > 2) {
      bad(key, "expected one or two integers");
    }
    int lo = int(parse_int(key, toks.front()));
    int hi = toks.size() == 2 ? int(parse_int(key, toks.back())) : lo;
    c.*member = IntRange{lo, hi};
  };
}

Setter real_range(RealRange GenConfig::* member) {
  return [member](GenConfig& c, const std::string& key, const std::string& raw) {
    auto toks = split_ws(raw);
    if (toks.empty() || toks.size() > 2) {
      bad(key, "expected one or two numbers");
    }
    double lo = parse_real(key, toks.front());
    double hi = toks.size() == 2 ? parse_real(key, toks.back()) : lo;
    c.*member = RealRange{lo, hi};
  };
}

Setter path_value(std::filesystem::path GenConfig::* member) {
  return [member](GenConfig& c, const std::string&, const std::string& raw) {
    c.*member = std::filesystem::path(raw);
  };
}

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"canvas_width", int_range(&GenConfig::canvas_width)},
      {"canvas_height", int_range(&GenConfig::canvas_height)},
      {"columns", int_range(&GenConfig::columns)},
      {"line_height", int_range(&GenConfig::line_height)},
      {"margin", int_range(&GenConfig::margin)},
      {"region_lines", int_range(&GenConfig::region_lines)},
      {"align_weights",
       [](GenConfig& c, const std::string& key, const std::string& raw) {
         auto toks = split_ws(raw);
         if (toks.size() != 3) {
           bad(key, "expected three weights (left center right)");
         }
         for (std::size_t i = 0; i < 3; ++i) {
           c.align_weights[i] = parse_real(key, toks[i]);
         }
       }},
      {"blur_sigma", real_range(&GenConfig::blur_sigma)},
      {"noise_stddev", real_range(&GenConfig::noise_stddev)},
      {"perspective_jitter", real_range(&GenConfig::perspective_jitter)},
      {"brightness", real_range(&GenConfig::brightness)},
      {"contrast", real_range(&GenConfig::contrast)},
      {"shadow_prob",
       [](GenConfig& c, const std::string& key, const std::string& raw) {
         auto toks = split_ws(raw);
         if (toks.size() != 1) {
           bad(key, "expected one probability");
         }
         c.shadow_prob = parse_real(key, toks.front());
       }},
      {"seed",
       [](GenConfig& c, const std::string& key, const std::string& raw) {
         auto toks = split_ws(raw);
         if (toks.size() != 1) {
           bad(key, "expected one integer");
         }
         c.seed = std::uint64_t(parse_int(key, toks.front()));
       }},
      {"corpus_dir", path_value(&GenConfig::corpus_dir)},
      {"background_dir", path_value(&GenConfig::background_dir)},
      {"texture_dir", path_value(&GenConfig::texture_dir)},
      {"font_dir", path_value(&GenConfig::font_dir)},
  };
  return table;
}

void check_range(const char* key, const IntRange& r, int floor_lo) {
  if (r.hi < r.lo) {
    bad(key, "range is inverted");
  }
  if (r.lo < floor_lo) {
    bad(key, "must be at least " + std::to_string(floor_lo));
  }
}

void check_range(const char* key, const RealRange& r, double floor_lo) {
  if (r.hi < r.lo) {
    bad(key, "range is inverted");
  }
  if (r.lo < floor_lo) {
    bad(key, "must be at least " + std::to_string(floor_lo));
  }
}

}  // namespace

void GenConfig::validate() const {
  check_range("canvas_width", canvas_width, 64);
  check_range("canvas_height", canvas_height, 64);
  check_range("columns", columns, 1);
  check_range("line_height", line_height, 8);
  check_range("margin", margin, 0);
  check_range("region_lines", region_lines, 1);
  check_range("blur_sigma", blur_sigma, 0.0);
  check_range("noise_stddev", noise_stddev, 0.0);
  check_range("perspective_jitter", perspective_jitter, 0.0);
  if (perspective_jitter.hi > 0.2) {
    bad("perspective_jitter", "must not exceed 0.2");
  }
  check_range("brightness", brightness, -128.0);
  check_range("contrast", contrast, 0.05);
  if (shadow_prob < 0.0 || shadow_prob > 1.0) {
    bad("shadow_prob", "must lie in [0, 1]");
  }
  double weight_sum = 0.0;
  for (double w : align_weights) {
    if (w < 0.0) {
      bad("align_weights", "weights must be non-negative");
    }
    weight_sum += w;
  }
  if (weight_sum <= 0.0) {
    bad("align_weights", "weights must not all be zero");
  }
}

void apply_override(GenConfig& config, const std::string& key,
                    const std::string& value) {
  auto it = setters().find(key);
  if (it == setters().end()) {
    throw Error(ErrorCode::ConfigError, "unknown config key \"" + key + "\"");
  }
  it->second(config, key, trim_ascii_space(value));
}

GenConfig load_config(const std::filesystem::path& path) {
  GenConfig config;
  std::istringstream in(read_file(path));
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    line = trim_ascii_space(line);
    if (line.empty()) {
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::ConfigError,
                  path.string() + ":" + std::to_string(line_no) +
                      ": expected key = value");
    }
    const std::string key = trim_ascii_space(line.substr(0, eq));
    const std::string value = trim_ascii_space(line.substr(eq + 1));
    try {
      apply_override(config, key, value);
    } catch (const Error& e) {
      throw Error(ErrorCode::ConfigError, path.string() + ":" +
                                              std::to_string(line_no) + ": " +
                                              e.what());
    }
  }
  config.validate();
  return config;
}

}  // namespace docforge::synthdog
