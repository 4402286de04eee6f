#include "lui/binary_tree.hpp"

#include <utility>

#include "lui/errors.hpp"

namespace lui {

BinaryTree BinaryTree::join(const BinaryTree& left, const BinaryTree& right) {
  BinaryTree t;
  const std::size_t j = left.size();
  const std::size_t total = 1 + j + right.size();
  t.left_.reserve(total);
  t.right_.reserve(total);
  // Root first, then the left subtree shifted by 1, then the right shifted by j+1.
  t.left_.push_back(j > 0 ? 1 : -1);
  t.right_.push_back(right.size() > 0 ? static_cast<int>(j) + 1 : -1);
  for (std::size_t i = 0; i < j; ++i) {
    t.left_.push_back(left.left_[i] < 0 ? -1 : left.left_[i] + 1);
    t.right_.push_back(left.right_[i] < 0 ? -1 : left.right_[i] + 1);
  }
  const int shift = static_cast<int>(j) + 1;
  for (std::size_t i = 0; i < right.size(); ++i) {
    t.left_.push_back(right.left_[i] < 0 ? -1 : right.left_[i] + shift);
    t.right_.push_back(right.right_[i] < 0 ? -1 : right.right_[i] + shift);
  }
  return t;
}

Permutation BinaryTree::to_permutation() const {
  const std::size_t k = size();
  if (k == 0) return Permutation(0);
  std::vector<bool> is_right_child(k, false);
  for (std::size_t v = 0; v < k; ++v)
    if (right_[v] >= 0) is_right_child[static_cast<std::size_t>(right_[v])] = true;
  std::vector<std::uint8_t> images(k);
  // Each maximal right path (r0 r1 ... rj) contributes the cycle r0->r1->...->rj->r0.
  for (std::size_t v = 0; v < k; ++v) {
    if (is_right_child[v]) continue;
    std::size_t head = v;
    std::size_t node = v;
    while (right_[node] >= 0) {
      images[node] = static_cast<std::uint8_t>(right_[node]);
      node = static_cast<std::size_t>(right_[node]);
    }
    images[node] = static_cast<std::uint8_t>(head);
  }
  return Permutation::from_images(std::move(images));
}

namespace {

void render_parens(const BinaryTree& t, std::size_t node, std::string& out) {
  out += '(';
  out += std::to_string(node + 1);
  if (t.left(node) >= 0) {
    out += ' ';
    render_parens(t, static_cast<std::size_t>(t.left(node)), out);
  }
  if (t.right(node) >= 0) {
    out += ' ';
    render_parens(t, static_cast<std::size_t>(t.right(node)), out);
  }
  out += ')';
}

void render_art(const BinaryTree& t, std::size_t node, std::size_t depth, char tag, std::string& out) {
  out.append(2 * depth, ' ');
  if (tag) {
    out += tag;
    out += ' ';
  }
  out += std::to_string(node + 1);
  out += '\n';
  if (t.left(node) >= 0) render_art(t, static_cast<std::size_t>(t.left(node)), depth + 1, 'L', out);
  if (t.right(node) >= 0) render_art(t, static_cast<std::size_t>(t.right(node)), depth + 1, 'R', out);
}

} // namespace

std::string BinaryTree::parens() const {
  if (size() == 0) return "()";
  std::string out;
  render_parens(*this, 0, out);
  return out;
}

std::string BinaryTree::art() const {
  if (size() == 0) return "(empty)\n";
  std::string out;
  render_art(*this, 0, 0, 0, out);
  return out;
}

std::uint64_t catalan(std::size_t k) {
  // Exact for k <= 32: C(k+1) = C(k) * 2(2k+1) / (k+2).
  std::uint64_t c = 1;
  for (std::size_t i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

std::vector<BinaryTree> enumerate_trees(std::size_t k, std::size_t max_k) {
  if (k > max_k)
    throw size_error("enumerate_trees: k = " + std::to_string(k) + " exceeds maximum " + std::to_string(max_k));
  // levels[i] holds all trees with i nodes in enumeration order.
  std::vector<std::vector<BinaryTree>> levels(k + 1);
  levels[0].push_back(BinaryTree());
  for (std::size_t size = 1; size <= k; ++size) {
    auto& out = levels[size];
    out.reserve(catalan(size));
    for (std::size_t j = size; j-- > 0;) { // left subtree size descending
      for (const auto& l : levels[j])
        for (const auto& r : levels[size - 1 - j]) out.push_back(BinaryTree::join(l, r));
    }
  }
  return std::move(levels[k]);
}

std::vector<Permutation> tree_perm_set(std::size_t k, std::size_t max_k) {
  std::vector<Permutation> perms;
  const auto trees = enumerate_trees(k, max_k);
  perms.reserve(trees.size());
  for (const auto& t : trees) perms.push_back(t.to_permutation());
  return perms;
}

} // namespace lui
