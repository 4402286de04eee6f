#ifndef LUI_BINARY_TREE_HPP
#define LUI_BINARY_TREE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lui/permutation.hpp"

namespace lui {

/// Labeled ordered binary tree with k nodes. Nodes are stored in preorder
/// (root, left subtree, right subtree), so node index i carries label i+1.
class BinaryTree {
public:
  BinaryTree() = default; // empty tree, k = 0

  std::size_t size() const { return left_.size(); }
  /// 0-based child indices, -1 when absent.
  int left(std::size_t node) const { return left_[node]; }
  int right(std::size_t node) const { return right_[node]; }

  /// Join two subtrees under a fresh root.
  static BinaryTree join(const BinaryTree& left, const BinaryTree& right);

  /// Product of cycles over the maximal right paths of the tree.
  /// The empty tree maps to the empty permutation (degree 0).
  Permutation to_permutation() const;

  /// One-line structural rendering, e.g. "(1 (2) ((3)))" marking each node
  /// with its label and nesting left then right children.
  std::string parens() const;

  /// Indented multi-line rendering, one node per line.
  std::string art() const;

  friend bool operator==(const BinaryTree&, const BinaryTree&) = default;

private:
  std::vector<int> left_, right_;
};

/// Catalan number C(k) = binom(2k, k) / (k + 1).
std::uint64_t catalan(std::size_t k);

/// All distinct labeled ordered binary trees with k nodes, ordered by size
/// of the root's left subtree descending, recursively within each subtree.
std::vector<BinaryTree> enumerate_trees(std::size_t k, std::size_t max_k = 12);

/// Permutation set P_k: tree permutations in enumeration order, C(k) many.
std::vector<Permutation> tree_perm_set(std::size_t k, std::size_t max_k = 12);

} // namespace lui

#endif
