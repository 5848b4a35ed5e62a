#include <gtest/gtest.h>

#include "cstree/enumeration.hpp"
#include "cstree/errors.hpp"
#include "cstree/tree.hpp"

namespace cstree {
namespace {

// Eleven nodes, three branches with rightmost leaves at depths 3, 1, 3.
constexpr const char* kBijectionTree = "(((()()()))()(()(())))";
constexpr const char* kBijectionPath = "UUUDUDUDDDUDUUDUUDDD";

// Reduction chain 18 -> 6 -> 2 -> 1 nodes.
constexpr const char* kReductionChain[] = {
    "(((())(((()()()))()))()(()(((())))))",
    "(()(()(())))",
    "(())",
    "()",
};

TEST(ParseTree, SingleNode) {
  const PlaneTree t = parse_tree("()");
  EXPECT_EQ(t.size(), 1u);
  EXPECT_EQ(t, PlaneTree::leaf());
}

TEST(ParseTree, StarOfFour) {
  const PlaneTree t = parse_tree("(()()())");
  EXPECT_EQ(t.size(), 4u);
  EXPECT_EQ(t.child_count(0), 3u);
  EXPECT_EQ(t, PlaneTree::star(4));
}

TEST(ParseTree, RoundTrip) {
  EXPECT_EQ(parse_tree("((()))").to_string(), "((()))");
  EXPECT_EQ(parse_tree(kReductionChain[0]).to_string(), kReductionChain[0]);
  EXPECT_EQ(parse_tree("((()))"), PlaneTree::chain(3));
}

TEST(ParseTree, ErrorsCarryOffsets) {
  auto offset_of = [](std::string_view text) -> std::ptrdiff_t {
    try {
      parse_tree(text);
    } catch (const ParseError& e) {
      return static_cast<std::ptrdiff_t>(e.offset());
    }
    return -1;
  };
  EXPECT_EQ(offset_of(""), 0);
  EXPECT_EQ(offset_of("(()"), 3);
  EXPECT_EQ(offset_of("()()"), 2);
  EXPECT_EQ(offset_of(")("), 0);
  EXPECT_EQ(offset_of("(x)"), 1);
  EXPECT_THROW(parse_tree("(()))"), ParseError);
}

TEST(PlaneTree, StructureAccessors) {
  const PlaneTree t = parse_tree("((())()(()()))");
  EXPECT_EQ(t.size(), 7u);
  const auto kids = t.children(0);
  ASSERT_EQ(kids.size(), 3u);
  EXPECT_EQ(t.subtree(kids[0]).to_string(), "(())");
  EXPECT_EQ(t.subtree(kids[2]).to_string(), "(()())");
  EXPECT_EQ(t.last_child(0), kids[2]);
  EXPECT_EQ(t.branches().size(), 3u);
  EXPECT_EQ(PlaneTree::from_children(t.branches()), t);
  EXPECT_TRUE(t.is_leaf(kids[1]));
}

TEST(PlaneTree, OrderFollowsParenthesisWord) {
  EXPECT_LT(parse_tree("((()))"), parse_tree("(()())"));
  EXPECT_LT(parse_tree("(()())"), parse_tree("(())"));
}

TEST(IsCatalanStanley, Examples) {
  EXPECT_TRUE(is_catalan_stanley(PlaneTree::leaf()));
  EXPECT_FALSE(is_catalan_stanley(PlaneTree::chain(3)));
  EXPECT_TRUE(is_catalan_stanley(PlaneTree::chain(4)));
  EXPECT_TRUE(is_catalan_stanley(PlaneTree::star(4)));
  EXPECT_TRUE(is_catalan_stanley(parse_tree(kBijectionTree)));

  std::vector<std::string> size_four;
  for (const PlaneTree& t : enumerate_plane_trees(4)) {
    if (is_catalan_stanley(t)) size_four.push_back(t.to_string());
  }
  EXPECT_EQ(size_four, (std::vector<std::string>{"(((())))", "(()()())"}));
}

TEST(MarkedView, OneRightmostLeafPerBranch) {
  const MarkedView view = marked_view(parse_tree(kBijectionTree));
  ASSERT_EQ(view.marked.size(), 3u);
  EXPECT_EQ(view.marked[0], (NodePath{0, 0, 2}));
  EXPECT_EQ(view.marked[1], (NodePath{1}));
  EXPECT_EQ(view.marked[2], (NodePath{2, 1, 0}));
}

TEST(Glove, Examples) {
  EXPECT_EQ(tree_to_dyck(PlaneTree::leaf()).length(), 0u);
  EXPECT_EQ(tree_to_dyck(PlaneTree::chain(4)).steps(), (std::vector<std::int8_t>{1, 1, 1, -1, -1, -1}));
  EXPECT_EQ(tree_to_dyck(PlaneTree::star(4)).steps(), (std::vector<std::int8_t>{1, -1, 1, -1, 1, -1}));
  EXPECT_EQ(dyck_to_tree(DyckPath()), PlaneTree::leaf());
  EXPECT_EQ(dyck_to_tree(DyckPath::from_string("UD")), PlaneTree::chain(2));
}

TEST(Glove, ElevenNodeFixture) {
  const DyckPath path = DyckPath::from_string(kBijectionPath);
  EXPECT_EQ(path.length(), 20u);
  const PlaneTree tree = dyck_to_tree(path);
  EXPECT_EQ(tree.size(), 11u);
  EXPECT_EQ(tree.to_string(), kBijectionTree);
  EXPECT_EQ(path.return_run_lengths(), (std::vector<std::size_t>{3, 1, 3}));
  EXPECT_TRUE(path.has_odd_returns());
  EXPECT_EQ(tree_to_dyck(tree), path);
}

TEST(DyckPath, RejectsMalformedSteps) {
  EXPECT_THROW(DyckPath({-1, 1}), MalformedPathError);
  EXPECT_THROW(DyckPath({1, 1, -1}), MalformedPathError);
  EXPECT_THROW(DyckPath({1, 0}), MalformedPathError);
  EXPECT_THROW(DyckPath::from_string("UX"), MalformedPathError);
}

TEST(DyckPath, EvenReturnDetected) {
  const DyckPath p = DyckPath::from_string("UUDD");
  EXPECT_EQ(p.return_run_lengths(), (std::vector<std::size_t>{2}));
  EXPECT_FALSE(p.has_odd_returns());
  EXPECT_FALSE(is_catalan_stanley(dyck_to_tree(p)));
}

TEST(Reduce, Examples) {
  EXPECT_EQ(reduce(PlaneTree::leaf()), PlaneTree::leaf());
  EXPECT_EQ(reduce(PlaneTree::chain(4)), PlaneTree::chain(2));
  EXPECT_EQ(reduce(PlaneTree::chain(2)), PlaneTree::leaf());
  EXPECT_EQ(reduce(PlaneTree::star(6)), PlaneTree::leaf());
}

TEST(Reduce, EighteenNodeChain) {
  const std::size_t sizes[] = {18, 6, 2, 1};
  for (std::size_t i = 0; i < 4; ++i) {
    const PlaneTree t = parse_tree(kReductionChain[i]);
    EXPECT_EQ(t.size(), sizes[i]);
    EXPECT_TRUE(is_catalan_stanley(t));
    if (i + 1 < 4) EXPECT_EQ(reduce(t).to_string(), kReductionChain[i + 1]);
  }
  const PlaneTree start = parse_tree(kReductionChain[0]);
  EXPECT_EQ(age(start), 3u);
  EXPECT_EQ(age_by_reduction(start), 3u);
}

TEST(Reduce, RejectsInvalidInput) {
  EXPECT_THROW(reduce(PlaneTree::chain(3)), DomainError);
  EXPECT_THROW(age(PlaneTree::chain(3)), DomainError);
  EXPECT_THROW(ancestor(parse_tree("((())())"), 1), DomainError);
}

TEST(Age, Examples) {
  EXPECT_EQ(age(PlaneTree::leaf()), 0u);
  for (std::size_t n = 2; n <= 12; ++n) EXPECT_EQ(age(PlaneTree::star(n)), 1u);
  for (std::size_t n = 2; n <= 16; n += 2) {
    EXPECT_EQ(age(PlaneTree::chain(n)), n / 2);
    EXPECT_EQ(age_by_reduction(PlaneTree::chain(n)), n / 2);
  }
}

TEST(Ancestor, Examples) {
  const PlaneTree t = parse_tree(kReductionChain[0]);
  EXPECT_EQ(ancestor(t, 0), t);
  EXPECT_EQ(ancestor(PlaneTree::chain(4), 1), PlaneTree::chain(2));
  EXPECT_EQ(ancestor(t, 2).to_string(), kReductionChain[2]);
  for (std::size_t r = t.size() / 2; r <= t.size(); ++r) EXPECT_EQ(ancestor(t, r), PlaneTree::leaf());
}

TEST(Properties, ExhaustiveSmallSizes) {
  for (std::size_t n = 1; n <= 12; ++n) {
    for (const PlaneTree& t : enumerate_plane_trees(n)) {
      ASSERT_EQ(dyck_to_tree(tree_to_dyck(t)), t);
      ASSERT_EQ(parse_tree(t.to_string()), t);
      ASSERT_EQ(is_catalan_stanley(t), tree_to_dyck(t).has_odd_returns()) << t.to_string();
    }
  }
  for (std::size_t n = 2; n <= 13; ++n) {
    for (const PlaneTree& t : enumerate_trees(n)) {
      const PlaneTree r = reduce(t);
      ASSERT_TRUE(is_catalan_stanley(r));
      ASSERT_LE(r.size() + (n == 2 ? 1 : 2), n);
      ASSERT_EQ(age(t), age_by_reduction(t));
      ASSERT_GE(age(t), 1u);
      ASSERT_LE(age(t), n / 2);
    }
  }
}

}  // namespace
}  // namespace cstree
