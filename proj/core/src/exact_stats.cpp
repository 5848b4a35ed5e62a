#include "cstree/exact_stats.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "cstree/errors.hpp"
#include "cstree/series.hpp"

namespace cstree {

namespace {

// binom(a, b) for any integer a: (-1)^b binom(b - a - 1, b) when a < 0.
BigInt signed_binomial(std::int64_t a, std::int64_t b) {
  if (b < 0) return 0;
  if (a >= 0) return binomial(a, b);
  BigInt magnitude = binomial(b - a - 1, b);
  return b % 2 == 0 ? magnitude : BigInt(-magnitude);
}

// Coefficient kernel shared by the age formulas. For m = j (2r - 1) it is
//   [u^{n-1-m}] (1 + u - 2u^2) (1 + u)^{2n-4-m},
// i.e. binom(2n-4-m, n-3) + binom(2n-4-m, n-2) - 2 binom(2n-4-m, n-1)
// whenever 2n - 4 - m >= 0. Only n = 2 reaches a negative exponent.
BigInt age_term(std::int64_t n, std::int64_t m) {
  const std::int64_t a = 2 * n - 4 - m;
  const std::int64_t k = n - 1 - m;
  return signed_binomial(a, k) + signed_binomial(a, k - 1) - 2 * signed_binomial(a, k - 2);
}

// kernel[m] = age_term(n, m) for 1 <= m <= n - 1, via three binomial columns.
std::vector<BigInt> age_kernel(std::int64_t n) {
  std::vector<BigInt> kernel(static_cast<std::size_t>(n), 0);
  if (n < 3) {
    for (std::int64_t m = 1; m < n; ++m) kernel[m] = age_term(n, m);
    return kernel;
  }
  // column[x - (n - 3)] = binom(x, b) for x in [n - 3, 2n - 5].
  auto column = [n](std::int64_t b) {
    std::vector<BigInt> col(static_cast<std::size_t>(n - 1), 0);
    BigInt value = 0;
    for (std::int64_t x = n - 3; x <= 2 * n - 5; ++x) {
      if (x == b) {
        value = 1;
      } else if (x > b) {
        value = value * x / (x - b);
      }
      col[x - (n - 3)] = value;
    }
    return col;
  };
  const auto c3 = column(n - 3);
  const auto c2 = column(n - 2);
  const auto c1 = column(n - 1);
  for (std::int64_t m = 1; m < n; ++m) {
    const std::size_t x = static_cast<std::size_t>(2 * n - 4 - m - (n - 3));
    kernel[m] = c3[x] + c2[x] - 2 * c1[x];
  }
  return kernel;
}

void require_at_least_two(std::uint64_t n, const char* op) {
  if (n < 2) throw DomainError(std::string(op) + ": size must be at least 2");
}

}  // namespace

std::uint64_t odd_divisor_count(std::uint64_t k) {
  if (k == 0) throw DomainError("odd_divisor_count: k must be positive");
  while (k % 2 == 0) k /= 2;
  std::uint64_t count = 0;
  for (std::uint64_t d = 1; d * d <= k; ++d) {
    if (k % d == 0) count += d * d == k ? 1 : 2;
  }
  return count;
}

std::int64_t signed_divisor_sum(std::uint64_t k) {
  if (k == 0) throw DomainError("signed_divisor_sum: k must be positive");
  std::int64_t sum = 0;
  for (std::uint64_t j = 1; j <= k; ++j) {
    if (k % j == 0 && (k / j) % 2 == 1) sum += j % 2 == 1 ? 1 : -1;
  }
  return sum;
}

BigInt age_count_geq(std::uint64_t n, std::uint64_t r) {
  require_at_least_two(n, "age_count_geq");
  if (r == 0) throw DomainError("age_count_geq: r must be at least 1");
  const auto nn = static_cast<std::int64_t>(n);
  const auto step = static_cast<std::int64_t>(2 * r - 1);
  BigInt sum = 0;
  for (std::int64_t j = 1; j * step <= nn - 1; ++j) {
    const BigInt term = age_term(nn, j * step);
    if (j % 2 == 1) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

std::vector<BigInt> age_counts_geq(std::uint64_t n) {
  require_at_least_two(n, "age_counts_geq");
  const auto nn = static_cast<std::int64_t>(n);
  const auto kernel = age_kernel(nn);
  std::vector<BigInt> counts(n / 2 + 2, 0);
  counts[0] = catalan_number(n - 2);
  for (std::size_t r = 1; r < counts.size(); ++r) {
    const auto step = static_cast<std::int64_t>(2 * r - 1);
    BigInt sum = 0;
    for (std::int64_t j = 1; j * step <= nn - 1; ++j) {
      if (j % 2 == 1) {
        sum += kernel[j * step];
      } else {
        sum -= kernel[j * step];
      }
    }
    counts[r] = sum;
  }
  return counts;
}

DistributionTable age_distribution(std::uint64_t n) {
  DistributionTable table;
  table.size_n = n;
  table.kind = DistributionTable::Kind::age;
  if (n == 0) throw DomainError("age_distribution: size must be positive");
  if (n == 1) {
    table.support = {0};
    table.mass = {Rational(1)};
    return table;
  }
  const auto counts = age_counts_geq(n);
  const BigInt total = counts[0];
  for (std::size_t r = 1; r <= n / 2; ++r) {
    table.support.push_back(static_cast<std::int64_t>(r));
    table.mass.push_back(Rational(counts[r] - counts[r + 1], total));
  }
  return table;
}

Rational expected_age(std::uint64_t n) {
  if (n == 0) throw DomainError("expected_age: size must be positive");
  if (n == 1) return 0;
  const auto nn = static_cast<std::int64_t>(n);
  const auto kernel = age_kernel(nn);
  BigInt sum = 0;
  for (std::int64_t k = 1; k <= nn - 1; ++k) {
    const BigInt term = BigInt(odd_divisor_count(static_cast<std::uint64_t>(k))) * kernel[k];
    if (k % 2 == 1) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return Rational(sum, catalan_number(n - 2));
}

Rational expected_age_from_tails(std::uint64_t n) {
  if (n == 0) throw DomainError("expected_age_from_tails: size must be positive");
  if (n == 1) return 0;
  const auto counts = age_counts_geq(n);
  BigInt sum = 0;
  for (std::size_t r = 1; r < counts.size(); ++r) sum += counts[r];
  return Rational(sum, counts[0]);
}

Rational age_variance(std::uint64_t n) {
  if (n == 0) throw DomainError("age_variance: size must be positive");
  if (n == 1) return 0;
  const auto counts = age_counts_geq(n);
  BigInt first = 0;
  BigInt second = 0;
  for (std::size_t r = 1; r < counts.size(); ++r) {
    first += counts[r];
    second += (2 * r - 1) * counts[r];
  }
  const Rational mean(first, counts[0]);
  return Rational(second, counts[0]) - mean * mean;
}

Rational expected_ancestor_size(std::uint64_t n, std::uint64_t r) {
  if (n == 0) throw DomainError("expected_ancestor_size: size must be positive");
  if (n == 1) return 1;
  const auto nn = static_cast<std::int64_t>(n);
  const auto rr = static_cast<std::int64_t>(r);
  // binom with a negative upper index is taken as zero here.
  return Rational(binomial(2 * nn - 2 * rr - 4, nn - 2), catalan_number(n - 2)) + 1;
}

DistributionTable ancestor_distribution(std::uint64_t n, std::uint64_t r, std::size_t order) {
  if (n == 0) throw DomainError("ancestor_distribution: size must be positive");
  DistributionTable table;
  table.size_n = n;
  table.kind = DistributionTable::Kind::ancestor;
  table.depth = r;
  if (n == 1) {
    table.support = {1};
    table.mass = {Rational(1)};
    return table;
  }
  if (n > order) {
    throw CapacityError("ancestor_distribution: size " + std::to_string(n) + " requires series order >= " +
                        std::to_string(n) + " (configured " + std::to_string(order) + ")");
  }
  const auto slice = series_G(r, order).slice(n);
  const BigInt total = catalan_number(n - 2);
  for (std::size_t m = 0; m < slice.size(); ++m) {
    if (slice[m] == 0) continue;
    table.support.push_back(static_cast<std::int64_t>(m));
    table.mass.push_back(slice[m] / total);
  }
  return table;
}

Rational DistributionTable::total_mass() const {
  Rational sum = 0;
  for (const auto& p : mass) sum += p;
  return sum;
}

Rational DistributionTable::mean() const {
  Rational sum = 0;
  for (std::size_t i = 0; i < mass.size(); ++i) sum += mass[i] * support[i];
  return sum;
}

Rational DistributionTable::second_factorial_moment() const {
  Rational sum = 0;
  for (std::size_t i = 0; i < mass.size(); ++i) sum += mass[i] * support[i] * (support[i] - 1);
  return sum;
}

Rational DistributionTable::variance() const {
  const Rational mu = mean();
  return second_factorial_moment() + mu - mu * mu;
}

Rational DistributionTable::probability(std::int64_t value) const {
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (support[i] == value) return mass[i];
  }
  return 0;
}

std::string DistributionTable::to_csv() const {
  std::ostringstream out;
  out << "value,numerator,denominator\n";
  for (std::size_t i = 0; i < support.size(); ++i) {
    out << support[i] << ',' << boost::multiprecision::numerator(mass[i]) << ','
        << boost::multiprecision::denominator(mass[i]) << '\n';
  }
  return out.str();
}

std::string DistributionTable::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = size_n;
  j["kind"] = kind == Kind::age ? "age" : "ancestor";
  if (kind == Kind::ancestor) j["r"] = depth;
  j["support"] = support;
  auto masses = nlohmann::ordered_json::array();
  for (const auto& p : mass) masses.push_back(to_fraction_string(p));
  j["mass"] = std::move(masses);
  return j.dump();
}

std::string to_string(MomentReport::Source source) {
  switch (source) {
    case MomentReport::Source::formula:
      return "formula";
    case MomentReport::Source::series:
      return "series";
    case MomentReport::Source::brute_force:
      return "brute-force";
  }
  return "unknown";
}

std::string MomentReport::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  if (r) j["r"] = *r;
  j["expectation"] = to_fraction_string(expectation);
  j["variance"] = to_fraction_string(variance);
  j["source"] = to_string(source);
  return j.dump();
}

}  // namespace cstree
