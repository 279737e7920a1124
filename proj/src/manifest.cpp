#include "docforge/manifest.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "docforge/codec.hpp"
#include "docforge/errors.hpp"
#include "docforge/json_io.hpp"

namespace docforge {
namespace {

using ordered_json = nlohmann::ordered_json;

double round2(double v) {
  double r = std::round(v * 100.0) / 100.0;
  return r == 0.0 ? 0.0 : r;  // normalize -0
}

ordered_json record_json(const ManifestRecord& record) {
  ordered_json words = ordered_json::array();
  for (const auto& word : record.words) {
    ordered_json quad = ordered_json::array();
    for (const auto& pt : word.quad) {
      quad.push_back({round2(pt[0]), round2(pt[1])});
    }
    words.push_back({{"text", word.text}, {"quad", std::move(quad)}});
  }
  return ordered_json{
      {"file_name", record.file_name},
      {"ground_truth",
       ordered_json{{"gt_parse", doctree_to_ordered_json(record.gt_parse)}}},
      {"words", std::move(words)}};
}

void collect_fields(const Value& value, std::vector<std::string>& out,
                    std::set<std::string>& seen) {
  if (value.is_object()) {
    for (const auto& [key, child] : value.object()) {
      if (seen.insert(key).second) {
        out.push_back(key);
      }
      collect_fields(child, out, seen);
    }
  } else if (value.is_array()) {
    for (const auto& item : value.array()) {
      collect_fields(item, out, seen);
    }
  }
}

std::vector<std::string> field_names(const DocTree& tree) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  collect_fields(Value(tree.root), out, seen);
  return out;
}

/// Positive for the documented corner order (clockwise on a y-down canvas).
double shoelace(const std::array<std::array<double, 2>, 4>& quad) {
  double sum = 0.0;
  for (int i = 0; i < 4; ++i) {
    const auto& a = quad[i];
    const auto& b = quad[(i + 1) % 4];
    sum += a[0] * b[1] - b[0] * a[1];
  }
  return sum / 2.0;
}

const Value* find_text_sequence(const DocTree& tree) {
  const Value* v = find_root_key(tree, "text_sequence");
  return (v != nullptr && v->is_text()) ? v : nullptr;
}

}  // namespace

std::string manifest_record_to_json(const ManifestRecord& record) {
  return record_json(record).dump();
}

ManifestRecord manifest_record_from_json(const std::string& line) {
  ordered_json j;
  try {
    j = ordered_json::parse(line);
  } catch (const nlohmann::detail::exception& e) {
    throw Error(ErrorCode::MalformedRecord, e.what());
  }
  if (!j.is_object()) {
    throw Error(ErrorCode::MalformedRecord, "record is not an object");
  }
  ManifestRecord record;
  if (!j.contains("file_name") || !j["file_name"].is_string() ||
      j["file_name"].get<std::string>().empty()) {
    throw Error(ErrorCode::MalformedRecord, "missing or empty file_name");
  }
  record.file_name = j["file_name"].get<std::string>();
  if (!j.contains("ground_truth") || !j["ground_truth"].is_object() ||
      !j["ground_truth"].contains("gt_parse")) {
    throw Error(ErrorCode::MalformedRecord, "missing ground_truth.gt_parse");
  }
  try {
    record.gt_parse = parse_doctree(j["ground_truth"]["gt_parse"].dump());
  } catch (const Error& e) {
    throw Error(ErrorCode::MalformedRecord,
                std::string("gt_parse: ") + e.what());
  }
  if (!j.contains("words") || !j["words"].is_array()) {
    throw Error(ErrorCode::MalformedRecord, "missing words array");
  }
  for (const auto& w : j["words"]) {
    if (!w.is_object() || !w.contains("text") || !w["text"].is_string() ||
        w["text"].get<std::string>().empty()) {
      throw Error(ErrorCode::MalformedRecord, "word without non-empty text");
    }
    if (!w.contains("quad") || !w["quad"].is_array() || w["quad"].size() != 4) {
      throw Error(ErrorCode::MalformedRecord, "quad must list 4 points");
    }
    WordRecord word;
    word.text = w["text"].get<std::string>();
    for (std::size_t i = 0; i < 4; ++i) {
      const auto& pt = w["quad"][i];
      if (!pt.is_array() || pt.size() != 2 || !pt[0].is_number() ||
          !pt[1].is_number()) {
        throw Error(ErrorCode::MalformedRecord, "quad point must be [x, y]");
      }
      word.quad[i] = {pt[0].get<double>(), pt[1].get<double>()};
      if (!std::isfinite(word.quad[i][0]) || !std::isfinite(word.quad[i][1])) {
        throw Error(ErrorCode::MalformedRecord, "quad point is not finite");
      }
    }
    record.words.push_back(std::move(word));
  }
  return record;
}

ManifestWriter::ManifestWriter(std::filesystem::path dataset_dir)
    : dataset_dir_(std::move(dataset_dir)) {
  std::filesystem::create_directories(dataset_dir_);
}

std::filesystem::path ManifestWriter::manifest_path() const {
  return dataset_dir_ / "metadata.jsonl";
}

void ManifestWriter::add(std::size_t index, ManifestRecord record) {
  std::lock_guard<std::mutex> lock(mutex_);
  records_.emplace_back(index, std::move(record));
}

void ManifestWriter::close() {
  std::lock_guard<std::mutex> lock(mutex_);
  if (closed_) {
    return;
  }
  std::sort(records_.begin(), records_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::ostringstream out;
  for (const auto& [index, record] : records_) {
    out << record_json(record).dump() << '\n';
  }
  write_file(manifest_path(), out.str());
  closed_ = true;
}

ManifestWriter::~ManifestWriter() {
  try {
    close();
  } catch (...) {
    // Destructors must not throw; call close() directly to observe errors.
  }
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> png_dimensions(
    const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return std::nullopt;
  }
  unsigned char header[24];
  in.read(reinterpret_cast<char*>(header), sizeof(header));
  if (in.gcount() != sizeof(header)) {
    return std::nullopt;
  }
  static const unsigned char signature[8] = {0x89, 'P',  'N',  'G',
                                             0x0D, 0x0A, 0x1A, 0x0A};
  if (std::memcmp(header, signature, 8) != 0 ||
      std::memcmp(header + 12, "IHDR", 4) != 0) {
    return std::nullopt;
  }
  auto be32 = [&](int offset) {
    return (std::uint32_t(header[offset]) << 24) |
           (std::uint32_t(header[offset + 1]) << 16) |
           (std::uint32_t(header[offset + 2]) << 8) |
           std::uint32_t(header[offset + 3]);
  };
  return std::make_pair(be32(16), be32(20));
}

ValidationReport validate_manifest(const std::filesystem::path& manifest_path,
                                   bool strict) {
  std::string content = read_file(manifest_path);
  const std::filesystem::path base = manifest_path.parent_path();

  ValidationReport report;
  std::set<std::string> names;
  std::istringstream lines(content);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    if (line.empty()) {
      continue;
    }
    ++report.records;
    auto flag = [&](const std::string& message) {
      report.violations.push_back({line_no, message});
    };

    ManifestRecord record;
    try {
      record = manifest_record_from_json(line);
    } catch (const Error& e) {
      flag(e.what());
      continue;
    }

    if (!names.insert(record.file_name).second) {
      flag("duplicate file_name " + record.file_name);
    }
    for (std::size_t w = 0; w < record.words.size(); ++w) {
      const auto& quad = record.words[w].quad;
      for (const auto& pt : quad) {
        if (pt[0] < 0.0 || pt[1] < 0.0) {
          flag("word " + std::to_string(w) + " quad has negative coordinates");
          break;
        }
      }
      if (strict && shoelace(quad) <= 0.0) {
        flag("word " + std::to_string(w) +
             " quad is not clockwise from the top left");
      }
    }

    if (!strict) {
      continue;
    }

    auto dims = png_dimensions(base / record.file_name);
    if (!dims) {
      flag("image " + record.file_name + " is missing or not a PNG");
    } else {
      const double w_max = double(dims->first) + 0.01;
      const double h_max = double(dims->second) + 0.01;
      for (std::size_t w = 0; w < record.words.size(); ++w) {
        for (const auto& pt : record.words[w].quad) {
          if (pt[0] > w_max || pt[1] > h_max) {
            flag("word " + std::to_string(w) + " quad exceeds image bounds");
            break;
          }
        }
      }
    }

    if (record.words.empty()) {
      flag("record has no words");
    }

    const Value* seq = find_text_sequence(record.gt_parse);
    if (seq == nullptr) {
      flag("gt_parse lacks a text_sequence field");
    } else {
      std::string joined;
      for (std::size_t w = 0; w < record.words.size(); ++w) {
        if (w > 0) {
          joined += ' ';
        }
        joined += record.words[w].text;
      }
      if (seq->text() != joined) {
        flag("text_sequence does not match the word list");
      }
    }

    try {
      Vocab vocab(field_names(record.gt_parse));
      DecodeResult back = decode(encode(record.gt_parse, vocab), vocab);
      if (!back.events.empty()) {
        flag("ground truth does not survive a token round trip");
      } else if (back.tree != canonicalize(record.gt_parse)) {
        flag("ground truth changes under a token round trip");
      }
    } catch (const Error& e) {
      flag(std::string("ground truth does not encode: ") + e.what());
    }
  }
  return report;
}

}  // namespace docforge
