/// docforge — synthetic document dataset toolkit.
///
/// Subcommands: generate (render a seeded dataset), encode/decode (token
/// sequence <-> document tree), score (nted / anls / accuracy reports),
/// validate (re-check a generated dataset).
///
/// Exit codes: 0 success; 1 validation violations; 2 input or config error;
/// 3 generation error; 4 recovery events under decode --strict; 5 id
/// misalignment between score files.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "docforge/codec.hpp"
#include "docforge/errors.hpp"
#include "docforge/json_io.hpp"
#include "docforge/manifest.hpp"
#include "docforge/metrics.hpp"
#include "docforge/surface.hpp"
#include "docforge/synthdog/config.hpp"
#include "docforge/synthdog/generate.hpp"
#include "docforge/vocab.hpp"

namespace {

using docforge::DocTree;
using docforge::Error;
using docforge::ErrorCode;
using docforge::Vocab;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitInput = 2;
constexpr int kExitGeneration = 3;
constexpr int kExitStrictRecovery = 4;
constexpr int kExitAlignment = 5;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  return docforge::read_file(path);
}

void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  docforge::write_file(path, content);
}

std::vector<std::string> string_array(const ordered_json& j, const char* key) {
  std::vector<std::string> out;
  for (const auto& item : j.at(key)) {
    if (!item.is_string()) {
      throw Error(ErrorCode::JsonSyntax,
                  std::string(key) + " entries must be strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

Vocab load_vocab(const std::string& path) {
  ordered_json j;
  try {
    j = ordered_json::parse(docforge::read_file(path));
  } catch (const nlohmann::detail::exception& e) {
    throw Error(ErrorCode::JsonSyntax, path + ": " + e.what());
  }
  if (!j.is_object()) {
    throw Error(ErrorCode::JsonSyntax, path + ": vocab must be a JSON object");
  }
  std::vector<std::string> fields, classes, prompts;
  std::size_t max_items = 0;
  for (const auto& [key, value] : j.items()) {
    if (key == "fields") {
      fields = string_array(j, "fields");
    } else if (key == "classes") {
      classes = string_array(j, "classes");
    } else if (key == "prompts") {
      prompts = string_array(j, "prompts");
    } else if (key == "max_items") {
      if (!value.is_number_unsigned()) {
        throw Error(ErrorCode::JsonSyntax,
                    path + ": max_items must be a non-negative integer");
      }
      max_items = value.get<std::size_t>();
    } else {
      throw Error(ErrorCode::JsonSyntax,
                  path + ": unknown vocab key \"" + key + "\"");
    }
  }
  return Vocab(std::move(fields), std::move(classes), std::move(prompts),
               max_items);
}

/// Strips one trailing newline (LF or CRLF); spaces stay significant.
std::string chomp(std::string s) {
  if (!s.empty() && s.back() == '\n') {
    s.pop_back();
    if (!s.empty() && s.back() == '\r') {
      s.pop_back();
    }
  }
  return s;
}

struct GenerateArgs {
  std::string config_path;
  std::size_t count = 0;
  std::optional<long long> seed;
  std::string out_dir;
  std::vector<std::string> overrides;
};

int run_generate(const GenerateArgs& args) {
  docforge::synthdog::GenConfig config;
  try {
    config = docforge::synthdog::load_config(args.config_path);
    for (const auto& kv : args.overrides) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) {
        throw Error(ErrorCode::ConfigError,
                    "--set expects key=value, got \"" + kv + "\"");
      }
      docforge::synthdog::apply_override(config, kv.substr(0, eq),
                                         kv.substr(eq + 1));
    }
    if (args.seed) {
      config.seed = std::uint64_t(*args.seed);
    }
    config.validate();
  } catch (const Error& e) {
    std::cerr << "docforge: " << e.what() << "\n";
    return kExitInput;
  }
  try {
    docforge::synthdog::DatasetWriter writer(args.out_dir);
    auto summary =
        docforge::synthdog::generate(config, args.count, writer, 0);
    writer.close();
    std::printf("images=%zu words=%zu seconds=%.2f\n", summary.images,
                summary.words, summary.seconds);
    return kExitOk;
  } catch (const Error& e) {
    std::cerr << "docforge: " << e.what() << "\n";
    return kExitGeneration;
  }
}

int run_encode(const std::string& in_path, const std::string& vocab_path) {
  const Vocab vocab = load_vocab(vocab_path);
  const DocTree tree = docforge::parse_doctree(read_input(in_path));
  const docforge::TokenSeq seq = docforge::encode(tree, vocab);
  std::cout << docforge::render_surface(seq) << "\n";
  return kExitOk;
}

int run_decode(const std::string& in_path, const std::string& vocab_path,
               bool strict) {
  const Vocab vocab = load_vocab(vocab_path);
  const docforge::TokenSeq seq =
      docforge::parse_surface(chomp(read_input(in_path)), vocab);
  const docforge::DecodeResult result = docforge::decode(seq, vocab);
  std::cout << docforge::doctree_to_json(result.tree) << "\n";
  if (!result.events.empty()) {
    ordered_json events = ordered_json::array();
    for (const auto& event : result.events) {
      events.push_back({{"kind", docforge::recovery_kind_name(event.kind)},
                        {"name", event.name},
                        {"items", event.items}});
    }
    std::cerr << events.dump() << "\n";
    if (strict) {
      return kExitStrictRecovery;
    }
  }
  return kExitOk;
}

struct ScoreArgs {
  std::string metric;
  std::string gt_path;
  std::string pred_path;
  std::string out_path = "-";
  double tau = 0.5;
  std::string key = "class";
};

std::vector<std::pair<std::string, ordered_json>> load_jsonl(
    const std::string& path) {
  std::vector<std::pair<std::string, ordered_json>> records;
  std::istringstream lines(docforge::read_file(path));
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    if (line.empty() || line == "\r") {
      continue;
    }
    ordered_json j;
    try {
      j = ordered_json::parse(line);
    } catch (const nlohmann::detail::exception& e) {
      throw Error(ErrorCode::JsonSyntax,
                  path + ":" + std::to_string(line_no) + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("id") || !j["id"].is_string()) {
      throw Error(ErrorCode::MalformedRecord,
                  path + ":" + std::to_string(line_no) +
                      ": record needs a string \"id\"");
    }
    const std::string id = j["id"].get<std::string>();
    for (const auto& [seen, unused] : records) {
      (void)unused;
      if (seen == id) {
        throw Error(ErrorCode::DuplicateKey,
                    path + ": duplicate id \"" + id + "\"");
      }
    }
    records.emplace_back(id, std::move(j));
  }
  return records;
}

DocTree parse_field(const ordered_json& record, const char* field,
                    const std::string& context) {
  if (!record.contains(field) || !record[field].is_object()) {
    throw Error(ErrorCode::MalformedRecord,
                context + ": record needs an object \"" + field + "\"");
  }
  return docforge::parse_doctree(record[field].dump());
}

int run_score(const ScoreArgs& args) {
  const auto gts = load_jsonl(args.gt_path);
  const auto preds = load_jsonl(args.pred_path);

  std::vector<std::string> missing, unknown;
  auto find_pred = [&](const std::string& id) -> const ordered_json* {
    for (const auto& [pid, record] : preds) {
      if (pid == id) {
        return &record;
      }
    }
    return nullptr;
  };
  for (const auto& [id, record] : gts) {
    (void)record;
    if (find_pred(id) == nullptr) {
      missing.push_back(id);
    }
  }
  for (const auto& [id, record] : preds) {
    (void)record;
    bool found = false;
    for (const auto& [gid, grecord] : gts) {
      (void)grecord;
      if (gid == id) {
        found = true;
        break;
      }
    }
    if (!found) {
      unknown.push_back(id);
    }
  }
  if (!missing.empty() || !unknown.empty()) {
    std::cerr << "docforge: id misalignment between " << args.gt_path
              << " and " << args.pred_path << "\n";
    for (const auto& id : missing) {
      std::cerr << "  missing prediction for id \"" << id << "\"\n";
    }
    for (const auto& id : unknown) {
      std::cerr << "  prediction for unknown id \"" << id << "\"\n";
    }
    return kExitAlignment;
  }

  docforge::MetricReport report;
  report.metric = args.metric;
  for (const auto& [id, gt] : gts) {
    const ordered_json& pred = *find_pred(id);
    double score = 0.0;
    if (args.metric == "nted") {
      score = docforge::nted(parse_field(pred, "parse", args.pred_path),
                             parse_field(gt, "parse", args.gt_path));
    } else if (args.metric == "accuracy") {
      score = docforge::classification_accuracy(
          {parse_field(pred, "parse", args.pred_path)},
          {parse_field(gt, "parse", args.gt_path)}, args.key);
    } else {  // anls
      if (!pred.contains("answer") || !pred["answer"].is_string()) {
        throw Error(ErrorCode::MalformedRecord,
                    args.pred_path + ": record \"" + id +
                        "\" needs a string \"answer\"");
      }
      std::vector<std::string> golds;
      if (gt.contains("answers") && gt["answers"].is_string()) {
        golds.push_back(gt["answers"].get<std::string>());
      } else if (gt.contains("answers") && gt["answers"].is_array()) {
        for (const auto& a : gt["answers"]) {
          if (!a.is_string()) {
            throw Error(ErrorCode::MalformedRecord,
                        args.gt_path + ": record \"" + id +
                            "\" answers must be strings");
          }
          golds.push_back(a.get<std::string>());
        }
      } else {
        throw Error(ErrorCode::MalformedRecord,
                    args.gt_path + ": record \"" + id +
                        "\" needs \"answers\"");
      }
      score = docforge::anls(pred["answer"].get<std::string>(), golds,
                             args.tau);
    }
    report.samples.push_back({id, score});
  }
  write_output(args.out_path, report.to_json() + "\n");
  return kExitOk;
}

int run_validate(const std::string& data_dir, bool strict) {
  const auto report = docforge::validate_manifest(
      std::filesystem::path(data_dir) / "metadata.jsonl", strict);
  for (const auto& violation : report.violations) {
    std::cout << "line " << violation.record << ": " << violation.message
              << "\n";
  }
  std::cout << "records=" << report.records
            << " violations=" << report.violations.size() << "\n";
  return report.ok() ? kExitOk : kExitViolations;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "docforge — seeded synthetic document image generation, token-sequence "
      "conversion and metric scoring"};
  app.require_subcommand(1);

  GenerateArgs gen_args;
  auto* gen = app.add_subcommand(
      "generate", "Render a synthetic dataset (images + metadata.jsonl)");
  gen->add_option("config", gen_args.config_path,
                  "Generator config file (key = value lines)")
      ->required();
  gen->add_option("--count", gen_args.count, "Number of images")->required();
  gen->add_option("--seed", gen_args.seed,
                  "Master seed (overrides the config file)");
  gen->add_option("--out", gen_args.out_dir, "Output dataset directory")
      ->required();
  gen->add_option("--set", gen_args.overrides,
                  "Config override key=value (repeatable)");

  std::string in_path = "-";
  std::string vocab_path;
  bool strict = false;
  auto* enc = app.add_subcommand(
      "encode", "Document tree JSON -> one-line token sequence");
  enc->add_option("--in", in_path, "Input file (default: stdin)");
  enc->add_option("--vocab", vocab_path, "Vocab JSON file")->required();

  auto* dec = app.add_subcommand(
      "decode",
      "Token sequence -> document tree JSON (recovery events on stderr)");
  dec->add_option("--in", in_path, "Input file (default: stdin)");
  dec->add_option("--vocab", vocab_path, "Vocab JSON file")->required();
  dec->add_flag("--strict", strict,
                "Exit 4 when recovery events occurred");

  ScoreArgs score_args;
  auto* score = app.add_subcommand(
      "score", "Score aligned prediction/ground-truth JSONL files");
  score
      ->add_option("--metric", score_args.metric,
                   "Metric: nted, anls or accuracy")
      ->required()
      ->check(CLI::IsMember({"nted", "anls", "accuracy"}));
  score->add_option("--gt", score_args.gt_path, "Ground-truth JSONL")
      ->required();
  score->add_option("--pred", score_args.pred_path, "Prediction JSONL")
      ->required();
  score->add_option("--out", score_args.out_path,
                    "Report file (default: stdout)");
  score->add_option("--tau", score_args.tau,
                    "ANLS similarity threshold (default 0.5)");
  score->add_option("--key", score_args.key,
                    "Accuracy: root field to compare (default \"class\")");

  std::string data_dir;
  bool validate_strict = false;
  auto* validate = app.add_subcommand(
      "validate",
      "Re-check a generated dataset; exit 1 when violations are found");
  validate->add_option("data", data_dir, "Dataset directory")->required();
  validate->add_flag("--strict", validate_strict,
                     "Also open images and re-check ground truth consistency");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*gen) {
      return run_generate(gen_args);
    }
    if (*enc) {
      return run_encode(in_path, vocab_path);
    }
    if (*dec) {
      return run_decode(in_path, vocab_path, strict);
    }
    if (*score) {
      return run_score(score_args);
    }
    if (*validate) {
      return run_validate(data_dir, validate_strict);
    }
  } catch (const Error& e) {
    std::cerr << "docforge: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "docforge: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
