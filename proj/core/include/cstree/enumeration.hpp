#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <vector>

#include "cstree/numeric.hpp"
#include "cstree/tree.hpp"

namespace cstree {

/// C_n with exact integer arithmetic.
BigInt catalan(std::uint64_t n);

/// Number of Catalan-Stanley trees of size n: 1 for n = 1, C_{n-2} otherwise.
BigInt count_trees(std::uint64_t n);

/// Streams trees of a fixed size in lexicographic order of their
/// parenthesis word. Works on the Dyck word of the tree and only extends
/// prefixes that can still be completed, so no candidate is ever discarded.
class TreeIterator {
 public:
  enum class Family { catalan_stanley, plane };

  TreeIterator(std::size_t size, Family family);

  std::size_t size() const noexcept { return size_; }
  /// Next tree, or nullopt once exhausted.
  std::optional<PlaneTree> next();

  struct Sentinel {};
  class Iterator {
   public:
    using value_type = PlaneTree;
    using difference_type = std::ptrdiff_t;
    explicit Iterator(TreeIterator* owner) : owner_(owner), current_(owner->next()) {}
    const PlaneTree& operator*() const { return *current_; }
    Iterator& operator++() {
      current_ = owner_->next();
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const Iterator& it, Sentinel) { return !it.current_.has_value(); }

   private:
    TreeIterator* owner_;
    std::optional<PlaneTree> current_;
  };

  Iterator begin() { return Iterator(this); }
  Sentinel end() const { return {}; }

 private:
  bool feasible(std::size_t height, std::size_t remaining, bool odd_run) const;
  bool down_allowed(std::size_t pos) const;
  void fill_from(std::size_t pos);
  void apply(std::size_t pos, std::int8_t step);

  std::size_t size_;
  Family family_;
  std::size_t length_;
  // feasible_[(remaining * (m + 2) + height) * 2 + parity]
  std::vector<char> feasible_;
  std::vector<std::int8_t> steps_;
  // State before step i: height and parity of the trailing down-run.
  std::vector<std::size_t> height_;
  std::vector<char> odd_run_;
  bool started_ = false;
  bool done_ = false;
};

/// All Catalan-Stanley trees of size n (n >= 1).
TreeIterator enumerate_trees(std::size_t n);
/// All plane trees of size n (n >= 1).
TreeIterator enumerate_plane_trees(std::size_t n);

/// Age and ancestor-size histograms over every Catalan-Stanley tree of a
/// size, obtained by explicit reduction of each tree.
struct Census {
  std::size_t size = 0;
  std::uint64_t total = 0;
  /// by_age[a] = number of trees of age a.
  std::vector<std::uint64_t> by_age;
  /// by_ancestor_size[r][m] = number of trees whose r-th ancestor has size m.
  std::vector<std::vector<std::uint64_t>> by_ancestor_size;

  /// Trees of age >= r.
  std::uint64_t age_at_least(std::size_t r) const;
};

Census brute_force_census(std::size_t n, std::size_t max_r);

enum class SamplingMethod {
  /// Uniform plane tree via cycle lemma, accepted iff Catalan-Stanley.
  rejection,
  /// Uniform plane tree of size n - 1 mapped bijectively onto the
  /// root branches of a Catalan-Stanley tree of size n.
  bijection,
};

struct SamplerConfig {
  std::size_t size = 1;
  std::uint64_t seed = 0;
  std::size_t max_rejections = 1000;
  SamplingMethod method = SamplingMethod::rejection;
};

/// Uniformly random Catalan-Stanley tree; deterministic given the config.
/// Throws SamplingError if the rejection budget is exhausted.
PlaneTree sample_tree(const SamplerConfig& cfg);

/// Uniform Dyck path of the given semilength (cycle lemma), deterministic in seed.
DyckPath sample_dyck_path(std::size_t semilength, std::uint64_t seed);

/// The map used by SamplingMethod::bijection, exposed for testing: takes a
/// plane tree with n - 1 nodes to a Catalan-Stanley tree with n nodes.
PlaneTree plane_tree_to_catalan_stanley(const PlaneTree& tree);

}  // namespace cstree
