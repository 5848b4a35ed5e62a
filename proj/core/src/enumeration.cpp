#include "cstree/enumeration.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "cstree/errors.hpp"

namespace cstree {

BigInt catalan(std::uint64_t n) { return catalan_number(n); }

BigInt count_trees(std::uint64_t n) {
  if (n == 0) throw DomainError("count_trees: size must be positive");
  return n == 1 ? BigInt(1) : catalan(n - 2);
}

TreeIterator::TreeIterator(std::size_t size, Family family)
    : size_(size), family_(family), length_(size == 0 ? 0 : 2 * (size - 1)) {
  if (size == 0) throw DomainError("enumerate: size must be positive");
  const std::size_t heights = size_ + 1;
  feasible_.assign((length_ + 1) * heights * 2, 0);
  auto at = [&](std::size_t r, std::size_t h, bool p) -> char& {
    return feasible_[(r * heights + h) * 2 + (p ? 1 : 0)];
  };
  for (std::size_t r = 0; r <= length_; ++r) {
    for (std::size_t h = 0; h < heights; ++h) {
      for (bool p : {false, true}) {
        bool ok = false;
        if (r == 0) {
          ok = h == 0;
        } else if (family_ == Family::plane) {
          ok = h <= r && (r - h) % 2 == 0;
        } else {
          if (h + 1 < heights && h + 1 <= r - 1 && at(r - 1, h + 1, false)) ok = true;
          if (!ok && h >= 1) {
            const bool next_odd = !p;
            if (!(h == 1 && !next_odd) && at(r - 1, h - 1, next_odd)) ok = true;
          }
        }
        at(r, h, p) = ok ? 1 : 0;
      }
    }
  }
  steps_.assign(length_, 0);
  height_.assign(length_ + 1, 0);
  odd_run_.assign(length_ + 1, 0);
}

bool TreeIterator::feasible(std::size_t height, std::size_t remaining, bool odd_run) const {
  if (height > size_) return false;
  return feasible_[(remaining * (size_ + 1) + height) * 2 + (odd_run ? 1 : 0)] != 0;
}

bool TreeIterator::down_allowed(std::size_t pos) const {
  const std::size_t h = height_[pos];
  if (h == 0) return false;
  const bool next_odd = !odd_run_[pos];
  // A down-run ending on the axis must have odd length.
  if (family_ == Family::catalan_stanley && h == 1 && !next_odd) return false;
  return feasible(h - 1, length_ - pos - 1, next_odd);
}

void TreeIterator::apply(std::size_t pos, std::int8_t step) {
  steps_[pos] = step;
  if (step > 0) {
    height_[pos + 1] = height_[pos] + 1;
    odd_run_[pos + 1] = 0;
  } else {
    height_[pos + 1] = height_[pos] - 1;
    odd_run_[pos + 1] = odd_run_[pos] ? 0 : 1;
  }
}

void TreeIterator::fill_from(std::size_t pos) {
  for (std::size_t i = pos; i < length_; ++i) {
    if (feasible(height_[i] + 1, length_ - i - 1, false)) {
      apply(i, 1);
    } else {
      apply(i, -1);
    }
  }
}

std::optional<PlaneTree> TreeIterator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    if (!feasible(0, length_, false)) {
      done_ = true;
      return std::nullopt;
    }
    fill_from(0);
  } else {
    std::size_t i = length_;
    bool advanced = false;
    while (i-- > 0) {
      if (steps_[i] > 0 && down_allowed(i)) {
        apply(i, -1);
        fill_from(i + 1);
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      done_ = true;
      return std::nullopt;
    }
  }
  return dyck_to_tree(DyckPath(steps_));
}

TreeIterator enumerate_trees(std::size_t n) {
  return TreeIterator(n, TreeIterator::Family::catalan_stanley);
}

TreeIterator enumerate_plane_trees(std::size_t n) { return TreeIterator(n, TreeIterator::Family::plane); }

std::uint64_t Census::age_at_least(std::size_t r) const {
  std::uint64_t count = 0;
  for (std::size_t a = r; a < by_age.size(); ++a) count += by_age[a];
  return count;
}

Census brute_force_census(std::size_t n, std::size_t max_r) {
  Census census;
  census.size = n;
  census.by_age.assign(n / 2 + 1, 0);
  census.by_ancestor_size.assign(max_r + 1, std::vector<std::uint64_t>(n + 1, 0));
  for (const PlaneTree& tree : enumerate_trees(n)) {
    ++census.total;
    ++census.by_age[age_by_reduction(tree)];
    PlaneTree current = tree;
    for (std::size_t r = 0; r <= max_r; ++r) {
      ++census.by_ancestor_size[r][current.size()];
      if (current.size() > 1) current = reduce(current);
    }
  }
  return census;
}

DyckPath sample_dyck_path(std::size_t semilength, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t total = 2 * semilength + 1;
  // Uniform arrangement of `semilength` ups and `semilength + 1` downs.
  std::vector<std::int8_t> word(total);
  std::size_t ups_left = semilength;
  for (std::size_t i = 0; i < total; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, total - i - 1);
    if (pick(rng) < ups_left) {
      word[i] = 1;
      --ups_left;
    } else {
      word[i] = -1;
    }
  }
  // Cycle lemma: start right after the first prefix minimum.
  long sum = 0;
  long minimum = 0;
  std::size_t argmin = 0;
  for (std::size_t i = 0; i < total; ++i) {
    sum += word[i];
    if (sum < minimum) {
      minimum = sum;
      argmin = i + 1;
    }
  }
  std::rotate(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(argmin % total), word.end());
  word.pop_back();
  return DyckPath(std::move(word));
}

PlaneTree plane_tree_to_catalan_stanley(const PlaneTree& tree) {
  const std::string word = tree.to_string();
  std::vector<std::size_t> match(word.size(), 0);
  {
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (word[i] == '(') {
        open.push_back(i);
      } else {
        match[open.back()] = i;
        open.pop_back();
      }
    }
  }
  // A node with children c_1..c_k becomes one branch whose rightmost path is
  // built from the pairs (c_1, c_2), (c_3, c_4), ...; for odd k the walk
  // continues with c_k, which starts the next branch.
  std::string out = "(";
  out.reserve(2 * tree.size() + 2);
  std::size_t node = 0;
  std::vector<std::size_t> kids;
  for (;;) {
    kids.clear();
    for (std::size_t c = node + 1; word[c] == '('; c = match[c] + 1) kids.push_back(c);
    const std::size_t paired = kids.size() - kids.size() % 2;
    for (std::size_t i = 0; i < paired; ++i) out.append(word, kids[i], match[kids[i]] - kids[i]);
    out += "()";
    out.append(paired, ')');
    if (kids.size() % 2 == 0) break;
    node = kids.back();
  }
  out += ')';
  return parse_tree(out);
}

PlaneTree sample_tree(const SamplerConfig& cfg) {
  if (cfg.size == 0) throw DomainError("sample_tree: size must be positive");
  if (cfg.max_rejections == 0) throw DomainError("sample_tree: max_rejections must be positive");
  if (cfg.size == 1) return PlaneTree::leaf();
  if (cfg.method == SamplingMethod::bijection) {
    return plane_tree_to_catalan_stanley(dyck_to_tree(sample_dyck_path(cfg.size - 2, cfg.seed)));
  }
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32)};
  std::mt19937_64 seeds(seq);
  for (std::size_t attempt = 0; attempt < cfg.max_rejections; ++attempt) {
    const DyckPath path = sample_dyck_path(cfg.size - 1, seeds());
    if (path.has_odd_returns()) return dyck_to_tree(path);
  }
  throw SamplingError("sample_tree: no Catalan-Stanley tree after " +
                      std::to_string(cfg.max_rejections) + " attempts");
}

}  // namespace cstree
