#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "cstree/numeric.hpp"

namespace cstree {

/// Value of a truncated asymptotic expansion together with the order of
/// the first omitted term.
struct AsymptoticEstimate {
  HighFloat value;
  std::string order_tag;
  int terms_used = 1;
};

struct ConstantSpec {
  static constexpr int max_digits = 60;

  int index = 0;  // 0..3
  int requested_digits = 30;
};

/// c0..c3 of the limiting age distribution, accurate to the requested
/// number of significant digits. Summation stops once the tail majorant
/// 400 r^4 / 4^r (geometric beyond r = 8) drops below 10^-(digits + 5).
/// Throws CapacityError above 60 digits.
HighFloat constant_c(const ConstantSpec& spec);

/// Decimal string with exactly `requested_digits` significant digits,
/// truncated (not rounded) so it is a prefix of the true expansion.
std::string constant_c_digits(const ConstantSpec& spec);

/// Number of series terms the stopping rule needs for `digits` digits.
std::size_t constant_terms_needed(int digits);

/// Limiting tail P(D >= r): 4 (4^r (3r - 1) + 1) / (4^r + 2)^2.
HighFloat age_tail_limit(std::uint64_t r);
/// Coefficient of -1/n in P(D_n >= r).
HighFloat age_tail_correction(std::uint64_t r);

/// Two-term expansion of P(D_n = r), error O(n^-2).
AsymptoticEstimate prob_age_asym(std::uint64_t n, std::uint64_t r);
/// c0 + c1 / n.
AsymptoticEstimate expected_age_asym(std::uint64_t n);
/// c2 + c3 / n.
AsymptoticEstimate age_variance_asym(std::uint64_t n);
/// Three-term expansion of E X_{n,r}, error O(n^-3/2).
AsymptoticEstimate expected_ancestor_asym(std::uint64_t n, std::uint64_t r);
/// Four-term expansion of V X_{n,r}, error O(1).
AsymptoticEstimate ancestor_variance_asym(std::uint64_t n, std::uint64_t r);

}  // namespace cstree
