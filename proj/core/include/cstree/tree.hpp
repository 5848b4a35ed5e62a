#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cstree {

/// Rooted ordered (plane) tree.
///
/// Stored as the preorder sequence of subtree sizes: node 0 is the root, the
/// first child of node v is v + 1 and consecutive siblings are separated by
/// the subtree size of the earlier one. Values are immutable once built.
class PlaneTree {
 public:
  using NodeId = std::uint32_t;

  /// The single-node tree.
  PlaneTree();

  static PlaneTree leaf() { return PlaneTree(); }
  /// Path with `n` nodes (n >= 1).
  static PlaneTree chain(std::size_t n);
  /// Root with n - 1 leaf children (n >= 1).
  static PlaneTree star(std::size_t n);
  static PlaneTree from_children(std::span<const PlaneTree> children);
  /// Builds a tree from the preorder depth sequence; depths[0] must be 0 and
  /// each following depth at most one greater than its predecessor.
  static PlaneTree from_preorder_depths(std::span<const std::uint32_t> depths);

  std::size_t size() const noexcept { return sizes_[0]; }
  bool is_leaf(NodeId v) const { return sizes_[v] == 1; }
  std::size_t subtree_size(NodeId v) const { return sizes_[v]; }

  std::vector<NodeId> children(NodeId v) const;
  std::size_t child_count(NodeId v) const;
  /// Last child of v; v must not be a leaf.
  NodeId last_child(NodeId v) const;

  /// Copy of the subtree rooted at v.
  PlaneTree subtree(NodeId v) const;
  /// Subtrees rooted at the children of the root, in order.
  std::vector<PlaneTree> branches() const;

  /// Balanced-parentheses word in preorder, e.g. "(()())".
  std::string to_string() const;

  std::span<const std::uint32_t> preorder_sizes() const noexcept { return sizes_; }

  friend bool operator==(const PlaneTree&, const PlaneTree&) = default;
  /// Lexicographic order of the parenthesis serialization ('(' < ')').
  friend std::strong_ordering operator<=>(const PlaneTree& a, const PlaneTree& b);

 private:
  explicit PlaneTree(std::vector<std::uint32_t> sizes) : sizes_(std::move(sizes)) {}

  std::vector<std::uint32_t> sizes_;
};

/// Parses a balanced-parentheses word whose first character opens the root.
/// Throws ParseError (with offset) on unbalanced, empty or trailing input.
PlaneTree parse_tree(std::string_view text);

/// Sequence of +1 / -1 steps with nonnegative prefix sums and total zero.
class DyckPath {
 public:
  DyckPath() = default;
  /// Throws MalformedPathError unless the steps form a Dyck path.
  explicit DyckPath(std::vector<std::int8_t> steps);
  /// Parses a word over {U, D}.
  static DyckPath from_string(std::string_view ud);

  const std::vector<std::int8_t>& steps() const noexcept { return steps_; }
  std::size_t length() const noexcept { return steps_.size(); }
  std::size_t semilength() const noexcept { return steps_.size() / 2; }

  /// Lengths of the maximal down-runs that end on the axis, left to right.
  std::vector<std::size_t> return_run_lengths() const;
  /// True iff every return run has odd length (true for the empty path).
  bool has_odd_returns() const;

  std::string to_string() const;

  friend bool operator==(const DyckPath&, const DyckPath&) = default;

 private:
  std::vector<std::int8_t> steps_;
};

/// Root-to-node child-index sequence.
using NodePath = std::vector<std::size_t>;

/// A tree together with the rightmost leaf of each root branch.
struct MarkedView {
  PlaneTree tree;
  std::vector<NodePath> marked;
};

MarkedView marked_view(const PlaneTree& tree);

/// Every root branch has its rightmost leaf at odd depth.
bool is_catalan_stanley(const PlaneTree& tree);

/// Glove bijection: preorder edge walk, one up-step on entering and one
/// down-step on leaving each non-root node.
DyckPath tree_to_dyck(const PlaneTree& tree);
PlaneTree dyck_to_tree(const DyckPath& path);

/// The reduction operator. For each root branch whose rightmost leaf sits at
/// depth 1 the branch is removed; otherwise all subtrees of the leaf's
/// grandparent are removed. Throws DomainError for non-Catalan-Stanley input.
PlaneTree reduce(const PlaneTree& tree);

/// Age from the deepest rightmost leaf: (1 + depth) / 2, zero for a leaf.
std::size_t age(const PlaneTree& tree);
/// Age as the number of reductions needed to reach the single node.
std::size_t age_by_reduction(const PlaneTree& tree);

/// r-fold reduction.
PlaneTree ancestor(const PlaneTree& tree, std::size_t r);

}  // namespace cstree
