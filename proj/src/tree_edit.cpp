#include <algorithm>
#include <vector>

#include "docforge/errors.hpp"
#include "docforge/metrics.hpp"

namespace docforge {

namespace {

std::size_t count_nodes(const TreeNode& node) {
  std::size_t n = 1;
  for (const TreeNode& child : node.children) n += count_nodes(child);
  return n;
}

// Postorder flattening with 1-based indices, leftmost-leaf table and
// keyroots (nodes with no same-leftmost-leaf node above them).
struct Flat {
  std::vector<const std::string*> label;  // [1..n]
  std::vector<int> lml;                   // [1..n]
  std::vector<int> keyroots;
  int n = 0;
};

int flatten_into(const TreeNode& node, Flat& f) {
  int first_leaf = 0;
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    int child_lml = flatten_into(node.children[i], f);
    if (i == 0) first_leaf = child_lml;
  }
  f.label.push_back(&node.label);
  f.lml.push_back(node.children.empty() ? static_cast<int>(f.label.size()) - 1
                                        : first_leaf);
  return f.lml.back();
}

Flat flatten(const TreeNode& root) {
  Flat f;
  f.label.push_back(nullptr);  // 1-based
  f.lml.push_back(0);
  flatten_into(root, f);
  f.n = static_cast<int>(f.label.size()) - 1;
  // keyroot = highest postorder index among nodes sharing a leftmost leaf
  std::vector<int> highest(f.n + 1, 0);
  for (int i = 1; i <= f.n; ++i) highest[f.lml[i]] = i;
  for (int i = 1; i <= f.n; ++i) {
    if (highest[f.lml[i]] == i) f.keyroots.push_back(i);
  }
  return f;
}

}  // namespace

std::size_t LabeledTree::node_count() const {
  return root ? count_nodes(*root) : 0;
}

std::size_t ted(const LabeledTree& a, const LabeledTree& b) {
  if (a.empty() && b.empty()) return 0;
  if (a.empty()) return b.node_count();
  if (b.empty()) return a.node_count();

  Flat fa = flatten(*a.root);
  Flat fb = flatten(*b.root);
  const int n1 = fa.n, n2 = fb.n;

  std::vector<std::vector<int>> td(n1 + 1, std::vector<int>(n2 + 1, 0));
  std::vector<std::vector<int>> fd(n1 + 2, std::vector<int>(n2 + 2, 0));

  for (int i : fa.keyroots) {
    for (int j : fb.keyroots) {
      const int li = fa.lml[i], lj = fb.lml[j];
      fd[li - 1][lj - 1] = 0;
      for (int di = li; di <= i; ++di) fd[di][lj - 1] = fd[di - 1][lj - 1] + 1;
      for (int dj = lj; dj <= j; ++dj) fd[li - 1][dj] = fd[li - 1][dj - 1] + 1;
      for (int di = li; di <= i; ++di) {
        for (int dj = lj; dj <= j; ++dj) {
          const int del = fd[di - 1][dj] + 1;
          const int ins = fd[di][dj - 1] + 1;
          if (fa.lml[di] == li && fb.lml[dj] == lj) {
            const int relabel = (*fa.label[di] == *fb.label[dj]) ? 0 : 1;
            fd[di][dj] = std::min({del, ins, fd[di - 1][dj - 1] + relabel});
            td[di][dj] = fd[di][dj];
          } else {
            fd[di][dj] = std::min(
                {del, ins, fd[fa.lml[di] - 1][fb.lml[dj] - 1] + td[di][dj]});
          }
        }
      }
    }
  }
  return static_cast<std::size_t>(td[n1][n2]);
}

}  // namespace docforge
