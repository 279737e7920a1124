#include "docforge/metrics.hpp"

#include <algorithm>
#include <json.hpp>

#include "docforge/errors.hpp"
#include "docforge/unicode.hpp"

namespace docforge {

namespace {

void append_children(const Value& value, const std::string& key,
                     std::vector<TreeNode>& out);

std::vector<TreeNode> children_of_object(const Object& object) {
  std::vector<TreeNode> out;
  for (const auto& [key, value] : object) append_children(value, key, out);
  return out;
}

void append_children(const Value& value, const std::string& key,
                     std::vector<TreeNode>& out) {
  if (value.is_array()) {
    for (const Value& element : value.array()) append_children(element, key, out);
    return;
  }
  TreeNode node{key, {}};
  if (value.is_text()) {
    node.children.push_back(TreeNode{value.text(), {}});
  } else {
    node.children = children_of_object(value.object());
  }
  out.push_back(std::move(node));
}

}  // namespace

LabeledTree tree_of(const DocTree& tree) {
  return LabeledTree{TreeNode{"<root>", children_of_object(tree.root)}};
}

double nted_trees(const LabeledTree& pred, const LabeledTree& gt) {
  const std::size_t gt_nodes = gt.node_count();
  if (gt_nodes == 0) {
    throw Error(ErrorCode::EmptyGroundTruth, "ground-truth tree is empty");
  }
  return static_cast<double>(ted(pred, gt)) / static_cast<double>(gt_nodes) * 100.0;
}

double nted(const DocTree& pred, const DocTree& gt) {
  return nted_trees(tree_of(pred), tree_of(gt));
}

std::size_t levenshtein(const std::string& a, const std::string& b) {
  // malformed UTF-8 falls back to byte granularity
  std::u32string ua = utf8_decode(a).value_or(std::u32string(a.begin(), a.end()));
  std::u32string ub = utf8_decode(b).value_or(std::u32string(b.begin(), b.end()));
  if (ua.size() < ub.size()) ua.swap(ub);
  const std::size_t n = ub.size();
  std::vector<std::size_t> row(n + 1);
  for (std::size_t j = 0; j <= n; ++j) row[j] = j;
  for (std::size_t i = 1; i <= ua.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= n; ++j) {
      const std::size_t sub = diag + (ua[i - 1] == ub[j - 1] ? 0 : 1);
      diag = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, sub});
    }
  }
  return row[n];
}

double anls(const std::string& pred, const std::vector<std::string>& golds,
            double tau) {
  if (golds.empty()) {
    throw Error(ErrorCode::NoGoldAnswers, "at least one gold answer required");
  }
  auto scalar_length = [](const std::string& s) {
    auto decoded = utf8_decode(s);
    return decoded ? decoded->size() : s.size();
  };
  const std::string p = to_lower_ascii(trim_ascii_space(pred));
  const std::size_t p_len = scalar_length(p);
  double best = 0.0;
  for (const std::string& gold : golds) {
    const std::string g = to_lower_ascii(trim_ascii_space(gold));
    double nls;
    if (p.empty() && g.empty()) {
      nls = 1.0;
    } else {
      const std::size_t len = std::max(p_len, scalar_length(g));
      nls = 1.0 - static_cast<double>(levenshtein(p, g)) / static_cast<double>(len);
    }
    if (nls < tau) nls = 0.0;
    best = std::max(best, nls);
  }
  return best;
}

double classification_accuracy(const std::vector<DocTree>& preds,
                               const std::vector<DocTree>& gts,
                               const std::string& key) {
  if (preds.size() != gts.size()) {
    throw Error(ErrorCode::LengthMismatch,
                "got " + std::to_string(preds.size()) + " predictions for " +
                    std::to_string(gts.size()) + " ground truths");
  }
  if (gts.empty()) return 0.0;
  std::size_t correct = 0;
  for (std::size_t i = 0; i < gts.size(); ++i) {
    const Value* gt_value = find_root_key(gts[i], key);
    if (gt_value == nullptr || !gt_value->is_text()) {
      throw Error(ErrorCode::MalformedGroundTruth,
                  "ground truth " + std::to_string(i) + " lacks text field '" +
                      key + "'");
    }
    const Value* pred_value = find_root_key(preds[i], key);
    if (pred_value != nullptr && pred_value->is_text() &&
        pred_value->text() == gt_value->text()) {
      ++correct;
    }
  }
  return static_cast<double>(correct) / static_cast<double>(gts.size());
}

double MetricReport::mean() const {
  if (samples.empty()) return 0.0;
  double sum = 0.0;
  for (const SampleScore& s : samples) sum += s.score;
  return sum / static_cast<double>(samples.size());
}

std::string MetricReport::to_json() const {
  nlohmann::ordered_json j;
  j["metric"] = metric;
  j["mean"] = mean();
  j["n"] = n();
  j["samples"] = nlohmann::ordered_json::array();
  for (const SampleScore& s : samples) {
    j["samples"].push_back({{"id", s.id}, {"score", s.score}});
  }
  return j.dump(2);
}

}  // namespace docforge
