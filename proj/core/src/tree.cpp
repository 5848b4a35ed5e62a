#include "cstree/tree.hpp"

#include <algorithm>
#include <numeric>

#include "cstree/errors.hpp"

namespace cstree {

PlaneTree::PlaneTree() : sizes_{1} {}

PlaneTree PlaneTree::chain(std::size_t n) {
  if (n == 0) throw DomainError("chain: size must be positive");
  std::vector<std::uint32_t> sizes(n);
  for (std::size_t i = 0; i < n; ++i) sizes[i] = static_cast<std::uint32_t>(n - i);
  return PlaneTree(std::move(sizes));
}

PlaneTree PlaneTree::star(std::size_t n) {
  if (n == 0) throw DomainError("star: size must be positive");
  std::vector<std::uint32_t> sizes(n, 1);
  sizes[0] = static_cast<std::uint32_t>(n);
  return PlaneTree(std::move(sizes));
}

PlaneTree PlaneTree::from_children(std::span<const PlaneTree> children) {
  std::vector<std::uint32_t> sizes{1};
  for (const auto& child : children) {
    sizes.insert(sizes.end(), child.sizes_.begin(), child.sizes_.end());
  }
  sizes[0] = static_cast<std::uint32_t>(sizes.size());
  return PlaneTree(std::move(sizes));
}

PlaneTree PlaneTree::from_preorder_depths(std::span<const std::uint32_t> depths) {
  if (depths.empty() || depths[0] != 0) {
    throw DomainError("preorder depths must start with the root at depth 0");
  }
  const std::size_t n = depths.size();
  std::vector<std::uint32_t> parent(n, 0);
  std::vector<std::uint32_t> open{0};
  for (std::size_t i = 1; i < n; ++i) {
    const std::uint32_t d = depths[i];
    if (d == 0 || d > open.size()) throw DomainError("invalid preorder depth sequence");
    open.resize(d);
    parent[i] = open.back();
    open.push_back(static_cast<std::uint32_t>(i));
  }
  std::vector<std::uint32_t> sizes(n, 1);
  for (std::size_t i = n; i-- > 1;) sizes[parent[i]] += sizes[i];
  return PlaneTree(std::move(sizes));
}

std::vector<PlaneTree::NodeId> PlaneTree::children(NodeId v) const {
  std::vector<NodeId> out;
  const NodeId end = v + sizes_[v];
  for (NodeId c = v + 1; c < end; c += sizes_[c]) out.push_back(c);
  return out;
}

std::size_t PlaneTree::child_count(NodeId v) const {
  std::size_t count = 0;
  const NodeId end = v + sizes_[v];
  for (NodeId c = v + 1; c < end; c += sizes_[c]) ++count;
  return count;
}

PlaneTree::NodeId PlaneTree::last_child(NodeId v) const {
  const NodeId end = v + sizes_[v];
  NodeId last = v + 1;
  for (NodeId c = v + 1; c < end; c += sizes_[c]) last = c;
  return last;
}

PlaneTree PlaneTree::subtree(NodeId v) const {
  return PlaneTree(std::vector<std::uint32_t>(sizes_.begin() + v, sizes_.begin() + v + sizes_[v]));
}

std::vector<PlaneTree> PlaneTree::branches() const {
  std::vector<PlaneTree> out;
  for (NodeId c : children(0)) out.push_back(subtree(c));
  return out;
}

std::string PlaneTree::to_string() const {
  std::string out;
  out.reserve(2 * sizes_.size());
  std::vector<std::uint32_t> ends;
  for (std::uint32_t v = 0; v < sizes_.size(); ++v) {
    while (!ends.empty() && ends.back() <= v) {
      out.push_back(')');
      ends.pop_back();
    }
    out.push_back('(');
    ends.push_back(v + sizes_[v]);
  }
  out.append(ends.size(), ')');
  return out;
}

std::strong_ordering operator<=>(const PlaneTree& a, const PlaneTree& b) {
  return a.to_string() <=> b.to_string();
}

PlaneTree parse_tree(std::string_view text) {
  if (text.empty()) throw ParseError("empty tree text", 0);
  std::vector<std::uint32_t> depths;
  std::uint32_t open = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == '(') {
      if (i > 0 && open == 0) throw ParseError("trailing input after the root closed", i);
      depths.push_back(open++);
    } else if (ch == ')') {
      if (open == 0) throw ParseError("unmatched ')'", i);
      --open;
    } else {
      throw ParseError(std::string("unexpected character '") + ch + "'", i);
    }
  }
  if (open != 0) throw ParseError("unbalanced parentheses", text.size());
  return PlaneTree::from_preorder_depths(depths);
}

DyckPath::DyckPath(std::vector<std::int8_t> steps) : steps_(std::move(steps)) {
  long height = 0;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (steps_[i] != 1 && steps_[i] != -1) {
      throw MalformedPathError("step " + std::to_string(i) + " is not +1 or -1");
    }
    height += steps_[i];
    if (height < 0) throw MalformedPathError("path dips below the axis at step " + std::to_string(i));
  }
  if (height != 0) throw MalformedPathError("path does not end on the axis");
}

DyckPath DyckPath::from_string(std::string_view ud) {
  std::vector<std::int8_t> steps;
  steps.reserve(ud.size());
  for (std::size_t i = 0; i < ud.size(); ++i) {
    if (ud[i] == 'U') {
      steps.push_back(1);
    } else if (ud[i] == 'D') {
      steps.push_back(-1);
    } else {
      throw MalformedPathError("unexpected character at offset " + std::to_string(i));
    }
  }
  return DyckPath(std::move(steps));
}

std::vector<std::size_t> DyckPath::return_run_lengths() const {
  std::vector<std::size_t> runs;
  long height = 0;
  std::size_t run = 0;
  for (auto step : steps_) {
    height += step;
    run = step < 0 ? run + 1 : 0;
    if (height == 0) runs.push_back(run);
  }
  return runs;
}

bool DyckPath::has_odd_returns() const {
  const auto runs = return_run_lengths();
  return std::all_of(runs.begin(), runs.end(), [](std::size_t r) { return r % 2 == 1; });
}

std::string DyckPath::to_string() const {
  std::string out;
  out.reserve(steps_.size());
  for (auto step : steps_) out.push_back(step > 0 ? 'U' : 'D');
  return out;
}

namespace {

// Nodes on the last-child path of the branch rooted at b, b first.
std::vector<PlaneTree::NodeId> rightmost_path(const PlaneTree& tree, PlaneTree::NodeId b) {
  std::vector<PlaneTree::NodeId> path{b};
  while (!tree.is_leaf(path.back())) path.push_back(tree.last_child(path.back()));
  return path;
}

void require_catalan_stanley(const PlaneTree& tree, const char* op) {
  if (!is_catalan_stanley(tree)) {
    throw DomainError(std::string(op) + ": tree is not a Catalan-Stanley tree: " + tree.to_string());
  }
}

}  // namespace

MarkedView marked_view(const PlaneTree& tree) {
  MarkedView view{tree, {}};
  const auto branches = tree.children(0);
  for (std::size_t i = 0; i < branches.size(); ++i) {
    NodePath position{i};
    for (PlaneTree::NodeId v = branches[i]; !tree.is_leaf(v); v = tree.last_child(v)) {
      position.push_back(tree.child_count(v) - 1);
    }
    view.marked.push_back(std::move(position));
  }
  return view;
}

bool is_catalan_stanley(const PlaneTree& tree) {
  for (PlaneTree::NodeId b : tree.children(0)) {
    if (rightmost_path(tree, b).size() % 2 == 0) return false;
  }
  return true;
}

DyckPath tree_to_dyck(const PlaneTree& tree) {
  const std::string word = tree.to_string();
  std::vector<std::int8_t> steps;
  steps.reserve(word.size() - 2);
  for (std::size_t i = 1; i + 1 < word.size(); ++i) steps.push_back(word[i] == '(' ? 1 : -1);
  return DyckPath(std::move(steps));
}

PlaneTree dyck_to_tree(const DyckPath& path) {
  std::vector<std::uint32_t> depths{0};
  depths.reserve(path.semilength() + 1);
  std::uint32_t height = 0;
  for (auto step : path.steps()) {
    height += step;
    if (step > 0) depths.push_back(height);
  }
  return PlaneTree::from_preorder_depths(depths);
}

PlaneTree reduce(const PlaneTree& tree) {
  require_catalan_stanley(tree, "reduce");
  const auto sizes = tree.preorder_sizes();
  const std::size_t n = tree.size();
  // removed[v] == 1 iff node v is deleted; deletions are whole subtrees.
  std::vector<std::uint32_t> removed(n, 0);
  for (PlaneTree::NodeId b : tree.children(0)) {
    const auto path = rightmost_path(tree, b);
    if (path.size() == 1) {
      removed[b] = 1;
      continue;
    }
    const PlaneTree::NodeId grandparent = path[path.size() - 3];
    std::fill(removed.begin() + grandparent + 1, removed.begin() + grandparent + sizes[grandparent], 1);
  }
  std::vector<std::uint32_t> prefix(n + 1, 0);
  std::partial_sum(removed.begin(), removed.end(), prefix.begin() + 1);

  std::vector<std::uint32_t> depths;
  depths.reserve(n - prefix[n]);
  std::vector<std::uint32_t> ends;
  for (std::uint32_t v = 0; v < n; ++v) {
    while (!ends.empty() && ends.back() <= v) ends.pop_back();
    if (!removed[v]) depths.push_back(static_cast<std::uint32_t>(ends.size()));
    ends.push_back(v + sizes[v]);
  }
  return PlaneTree::from_preorder_depths(depths);
}

std::size_t age(const PlaneTree& tree) {
  require_catalan_stanley(tree, "age");
  std::size_t deepest = 0;
  for (PlaneTree::NodeId b : tree.children(0)) {
    deepest = std::max(deepest, rightmost_path(tree, b).size());
  }
  return deepest == 0 ? 0 : (deepest + 1) / 2;
}

std::size_t age_by_reduction(const PlaneTree& tree) {
  std::size_t steps = 0;
  PlaneTree current = tree;
  require_catalan_stanley(current, "age");
  while (current.size() > 1) {
    current = reduce(current);
    ++steps;
  }
  return steps;
}

PlaneTree ancestor(const PlaneTree& tree, std::size_t r) {
  require_catalan_stanley(tree, "ancestor");
  PlaneTree current = tree;
  for (std::size_t i = 0; i < r && current.size() > 1; ++i) current = reduce(current);
  return current;
}

}  // namespace cstree
