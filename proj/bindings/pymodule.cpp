/// Python bindings for the docforge core: tree <-> token-sequence codec,
/// scoring metrics, and dataset generation. Trees cross the boundary as
/// plain dicts/lists/strings; token sequences as their one-line surface
/// form.

#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "docforge/codec.hpp"
#include "docforge/doctree.hpp"
#include "docforge/errors.hpp"
#include "docforge/metrics.hpp"
#include "docforge/surface.hpp"
#include "docforge/synthdog/config.hpp"
#include "docforge/synthdog/generate.hpp"
#include "docforge/vocab.hpp"

namespace py = pybind11;

namespace {

docforge::Value value_from_py(const py::handle& obj) {
  if (py::isinstance<py::str>(obj)) {
    return docforge::Value(obj.cast<std::string>());
  }
  if (py::isinstance<py::dict>(obj)) {
    docforge::Object pairs;
    for (const auto& item : obj.cast<py::dict>()) {
      if (!py::isinstance<py::str>(item.first)) {
        throw docforge::Error(docforge::ErrorCode::UnsupportedValue,
                              "object keys must be strings");
      }
      pairs.emplace_back(item.first.cast<std::string>(),
                         value_from_py(item.second));
    }
    return docforge::Value(std::move(pairs));
  }
  if (py::isinstance<py::list>(obj) || py::isinstance<py::tuple>(obj)) {
    docforge::Array items;
    for (const auto& item : obj.cast<py::sequence>()) {
      items.push_back(value_from_py(item));
    }
    return docforge::Value(std::move(items));
  }
  throw docforge::Error(docforge::ErrorCode::UnsupportedValue,
                        "tree values must be str, dict or list");
}

docforge::DocTree tree_from_py(const py::dict& obj) {
  docforge::DocTree tree;
  tree.root = value_from_py(obj).object();
  docforge::validate_tree(tree);
  return tree;
}

py::object value_to_py(const docforge::Value& value) {
  if (value.is_text()) {
    return py::str(value.text());
  }
  if (value.is_array()) {
    py::list out;
    for (const auto& item : value.array()) {
      out.append(value_to_py(item));
    }
    return out;
  }
  py::dict out;
  for (const auto& [key, child] : value.object()) {
    out[py::str(key)] = value_to_py(child);
  }
  return out;
}

docforge::Vocab vocab_from_py(const py::dict& spec) {
  std::vector<std::string> fields, classes, prompts;
  std::size_t max_items = 0;
  for (const auto& item : spec) {
    const std::string key = item.first.cast<std::string>();
    if (key == "fields") {
      fields = item.second.cast<std::vector<std::string>>();
    } else if (key == "classes") {
      classes = item.second.cast<std::vector<std::string>>();
    } else if (key == "prompts") {
      prompts = item.second.cast<std::vector<std::string>>();
    } else if (key == "max_items") {
      max_items = item.second.cast<std::size_t>();
    } else {
      throw docforge::Error(docforge::ErrorCode::ConfigError,
                            "unknown vocab key \"" + key + "\"");
    }
  }
  return docforge::Vocab(std::move(fields), std::move(classes),
                         std::move(prompts), max_items);
}

std::vector<docforge::DocTree> trees_from_py(const std::vector<py::dict>& v) {
  std::vector<docforge::DocTree> out;
  out.reserve(v.size());
  for (const auto& d : v) {
    out.push_back(tree_from_py(d));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(docforge, m) {
  m.doc() = "Synthetic document dataset toolkit: token codec, metrics, "
            "seeded page generation.";

  py::register_exception<docforge::Error>(m, "DocforgeError");

  m.def(
      "encode",
      [](const py::dict& tree, const py::dict& vocab) {
        return docforge::render_surface(
            docforge::encode(tree_from_py(tree), vocab_from_py(vocab)));
      },
      py::arg("tree"), py::arg("vocab"),
      "Serialize a document tree to its one-line token sequence.");

  m.def(
      "decode",
      [](const std::string& line, const py::dict& vocab) {
        const docforge::Vocab v = vocab_from_py(vocab);
        const auto result =
            docforge::decode(docforge::parse_surface(line, v), v);
        py::list events;
        for (const auto& event : result.events) {
          py::dict e;
          e["kind"] = docforge::recovery_kind_name(event.kind);
          e["name"] = event.name;
          e["items"] = event.items;
          events.append(e);
        }
        return py::make_tuple(value_to_py(docforge::Value(result.tree.root)),
                              events);
      },
      py::arg("line"), py::arg("vocab"),
      "Parse a token sequence; returns (tree, recovery_events).");

  m.def(
      "make_prompt",
      [](const py::dict& vocab, const std::string& task,
         const std::optional<std::string>& args) {
        return docforge::render_surface(
            docforge::make_prompt(vocab_from_py(vocab), task, args));
      },
      py::arg("vocab"), py::arg("task"), py::arg("args") = std::nullopt,
      "Task-conditioning token prefix in surface form.");

  m.def(
      "canonicalize",
      [](const py::dict& tree) {
        return value_to_py(
            docforge::Value(docforge::canonicalize(tree_from_py(tree)).root));
      },
      py::arg("tree"), "Collapse single-element arrays, recursively.");

  m.def(
      "nted",
      [](const py::dict& pred, const py::dict& gt) {
        return docforge::nted(tree_from_py(pred), tree_from_py(gt));
      },
      py::arg("pred"), py::arg("gt"),
      "Normalized tree edit distance (percent; lower is better).");

  m.def("levenshtein", &docforge::levenshtein, py::arg("a"), py::arg("b"),
        "Edit distance over Unicode scalar values.");

  m.def("anls", &docforge::anls, py::arg("pred"), py::arg("golds"),
        py::arg("tau") = 0.5,
        "Thresholded normalized Levenshtein similarity, max over golds.");

  m.def(
      "classification_accuracy",
      [](const std::vector<py::dict>& preds, const std::vector<py::dict>& gts,
         const std::string& key) {
        return docforge::classification_accuracy(trees_from_py(preds),
                                                 trees_from_py(gts), key);
      },
      py::arg("preds"), py::arg("gts"), py::arg("key") = "class");

  m.def(
      "generate",
      [](const std::string& config_path, const std::string& out_dir,
         std::size_t count, const std::optional<std::uint64_t>& seed,
         int threads) {
        auto config = docforge::synthdog::load_config(config_path);
        if (seed) {
          config.seed = *seed;
        }
        docforge::synthdog::DatasetWriter writer(out_dir);
        const auto summary =
            docforge::synthdog::generate(config, count, writer, threads);
        writer.close();
        py::dict out;
        out["images"] = summary.images;
        out["words"] = summary.words;
        out["seconds"] = summary.seconds;
        return out;
      },
      py::arg("config_path"), py::arg("out_dir"), py::arg("count"),
      py::arg("seed") = std::nullopt, py::arg("threads") = 0,
      "Render `count` pages into out_dir (images/ + metadata.jsonl).");
}
