#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cstree/numeric.hpp"

namespace cstree {

/// Exact probability mass function over an integer support.
struct DistributionTable {
  enum class Kind { age, ancestor };

  std::size_t size_n = 1;
  Kind kind = Kind::age;
  /// Reduction depth for Kind::ancestor.
  std::size_t depth = 0;
  std::vector<std::int64_t> support;  // ascending
  std::vector<Rational> mass;

  Rational total_mass() const;
  Rational mean() const;
  Rational variance() const;
  Rational second_factorial_moment() const;
  /// Mass at `value`, zero off the support.
  Rational probability(std::int64_t value) const;

  /// Rows "value,numerator,denominator" under that header.
  std::string to_csv() const;
  std::string to_json() const;
};

struct MomentReport {
  enum class Source { formula, series, brute_force };

  std::size_t n = 0;
  std::optional<std::size_t> r;
  Rational expectation;
  Rational variance;
  Source source = Source::formula;

  std::string to_json() const;
};

std::string to_string(MomentReport::Source source);

/// Number of odd divisors of k (k >= 1).
std::uint64_t odd_divisor_count(std::uint64_t k);
/// Sum of (-1)^{j-1} over factorizations k = j (2r - 1), j, r >= 1.
std::int64_t signed_divisor_sum(std::uint64_t k);

/// Number of size-n trees of age >= r, from the alternating binomial sum.
BigInt age_count_geq(std::uint64_t n, std::uint64_t r);
/// All of f_{n,1}, ..., f_{n, floor(n/2) + 1} (index 0 holds f_{n,0} = C_{n-2}).
std::vector<BigInt> age_counts_geq(std::uint64_t n);

DistributionTable age_distribution(std::uint64_t n);
/// Expected age via the odd-divisor binomial sum.
Rational expected_age(std::uint64_t n);
/// Expected age as sum over r of P(age >= r).
Rational expected_age_from_tails(std::uint64_t n);
Rational age_variance(std::uint64_t n);

/// E X_{n,r} = binom(2n - 2r - 4, n - 2) / C_{n-2} + 1.
Rational expected_ancestor_size(std::uint64_t n, std::uint64_t r);

/// Distribution of the size of the r-th ancestor, read off the z^n slice of
/// G_r. Throws CapacityError when n exceeds `order`.
DistributionTable ancestor_distribution(std::uint64_t n, std::uint64_t r, std::size_t order = 16);

}  // namespace cstree
