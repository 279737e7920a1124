#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "docforge/doctree.hpp"

namespace docforge {

/// Ordered labeled tree node.
struct TreeNode {
  std::string label;
  std::vector<TreeNode> children;

  bool operator==(const TreeNode& other) const {
    return label == other.label && children == other.children;
  }
};

/// An ordered labeled tree; the empty tree is represented explicitly.
struct LabeledTree {
  std::optional<TreeNode> root;

  bool empty() const { return !root.has_value(); }
  std::size_t node_count() const;

  bool operator==(const LabeledTree& other) const { return root == other.root; }
  bool operator!=(const LabeledTree& other) const { return root != other.root; }
};

/// Deterministic mapping from a document tree onto the metric's tree domain:
/// a synthetic `<root>` node, one k-labeled node per object pair (repeated
/// per array element), text leaves labeled with their string.
LabeledTree tree_of(const DocTree& tree);

/// Minimum-cost edit script distance between ordered labeled trees (insert 1,
/// delete 1, relabel 1 if labels differ), via the Zhang-Shasha dynamic
/// program over keyroots.
std::size_t ted(const LabeledTree& a, const LabeledTree& b);

/// ted divided by the ground-truth node count, reported as a percentage.
/// Lower is better. Throws Error(EmptyGroundTruth) when gt is empty.
double nted_trees(const LabeledTree& pred, const LabeledTree& gt);

/// nted over document trees (the ground-truth tree always has at least its
/// `<root>` node).
double nted(const DocTree& pred, const DocTree& gt);

/// Unit-cost edit distance over Unicode scalar values.
std::size_t levenshtein(const std::string& a, const std::string& b);

/// Max-over-golds thresholded normalized Levenshtein similarity for one
/// sample. Normalization lowercases (ASCII) and trims surrounding
/// whitespace; similarities below `tau` score 0. Throws
/// Error(NoGoldAnswers) when golds is empty.
double anls(const std::string& pred, const std::vector<std::string>& golds,
            double tau = 0.5);

/// Fraction of samples whose prediction carries the same text as the ground
/// truth under `key` in the root object. Missing or non-text predictions
/// count as wrong. Throws Error(LengthMismatch | MalformedGroundTruth).
double classification_accuracy(const std::vector<DocTree>& preds,
                               const std::vector<DocTree>& gts,
                               const std::string& key);

struct SampleScore {
  std::string id;
  double score = 0.0;
};

/// Per-sample scores plus their arithmetic mean.
struct MetricReport {
  std::string metric;
  std::vector<SampleScore> samples;

  std::size_t n() const { return samples.size(); }
  double mean() const;
  std::string to_json() const;
};

}  // namespace docforge
