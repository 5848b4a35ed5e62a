#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "cstree/enumeration.hpp"
#include "cstree/errors.hpp"
#include "cstree/exact_stats.hpp"
#include "cstree/series.hpp"

namespace cstree {
namespace {

Rational q(long a, long b = 1) { return Rational(a, b); }

TEST(OddDivisors, Values) {
  EXPECT_EQ(odd_divisor_count(1), 1u);
  EXPECT_EQ(odd_divisor_count(9), 3u);
  EXPECT_EQ(odd_divisor_count(12), 2u);
  EXPECT_EQ(signed_divisor_sum(12), -2);
  EXPECT_THROW(odd_divisor_count(0), DomainError);
  for (std::uint64_t k = 1; k <= 500; ++k) {
    const std::int64_t sign = k % 2 == 1 ? 1 : -1;
    EXPECT_EQ(sign * static_cast<std::int64_t>(odd_divisor_count(k)), signed_divisor_sum(k)) << k;
  }
}

TEST(AgeCountGeq, Values) {
  EXPECT_EQ(age_count_geq(4, 2), 1);
  EXPECT_EQ(age_count_geq(5, 2), 4);
  for (std::uint64_t n = 2; n <= 40; ++n) {
    EXPECT_EQ(age_count_geq(n, 1), catalan_number(n - 2));
    EXPECT_EQ(age_count_geq(n, n / 2 + 1), 0);
    EXPECT_EQ(age_count_geq(n, n), 0);
  }
  EXPECT_THROW(age_count_geq(1, 1), DomainError);
  EXPECT_THROW(age_count_geq(5, 0), DomainError);
}

TEST(AgeCountGeq, KernelVersionAgrees) {
  for (std::uint64_t n = 2; n <= 120; ++n) {
    const auto all = age_counts_geq(n);
    ASSERT_EQ(all.size(), n / 2 + 2);
    EXPECT_EQ(all[0], catalan_number(n - 2));
    for (std::uint64_t r = 1; r < all.size(); ++r) ASSERT_EQ(all[r], age_count_geq(n, r)) << n << "," << r;
  }
}

TEST(AgeCountGeq, TripleAgreement) {
  const std::size_t max_n = 13;
  for (std::size_t n = 2; n <= max_n; ++n) {
    const Census c = brute_force_census(n, 1);
    for (std::size_t r = 1; r <= n / 2 + 1; ++r) {
      EXPECT_EQ(age_count_geq(n, r), c.age_at_least(r));
      EXPECT_EQ(Rational(age_count_geq(n, r)), series_F_geq(r, max_n)[n]);
    }
  }
}

TEST(AgeDistribution, Values) {
  const auto d4 = age_distribution(4);
  EXPECT_EQ(d4.support, (std::vector<std::int64_t>{1, 2}));
  EXPECT_EQ(d4.mass, (std::vector<Rational>{q(1, 2), q(1, 2)}));
  const auto d5 = age_distribution(5);
  EXPECT_EQ(d5.mass, (std::vector<Rational>{q(1, 5), q(4, 5)}));
  const auto d2 = age_distribution(2);
  EXPECT_EQ(d2.support, std::vector<std::int64_t>{1});
  EXPECT_EQ(d2.mass, std::vector<Rational>{q(1)});
  const auto d1 = age_distribution(1);
  EXPECT_EQ(d1.support, std::vector<std::int64_t>{0});
  EXPECT_EQ(d1.total_mass(), 1);
  EXPECT_THROW(age_distribution(0), DomainError);
}

TEST(AgeDistribution, MassAndMoments) {
  for (std::uint64_t n = 2; n <= 200; n += 7) {
    const auto d = age_distribution(n);
    EXPECT_EQ(d.total_mass(), 1);
    for (const auto& p : d.mass) EXPECT_GE(p, 0);
    EXPECT_EQ(d.mean(), expected_age(n));
    EXPECT_EQ(d.variance(), age_variance(n));
  }
}

TEST(ExpectedAge, Values) {
  EXPECT_EQ(expected_age(4), q(3, 2));
  EXPECT_EQ(expected_age(5), q(9, 5));
  EXPECT_EQ(expected_age(2), 1);
  EXPECT_EQ(expected_age(1), 0);
  EXPECT_EQ(age_variance(4), q(1, 4));
  EXPECT_EQ(age_variance(2), 0);
  EXPECT_EQ(age_variance(5), q(4, 25));
  EXPECT_EQ(age_variance(1), 0);
}

TEST(ExpectedAge, AgreesWithTailsAndBruteForce) {
  for (std::uint64_t n = 2; n <= 300; ++n) ASSERT_EQ(expected_age(n), expected_age_from_tails(n)) << n;
  for (std::size_t n = 2; n <= 12; ++n) {
    const Census c = brute_force_census(n, 1);
    Rational mean = 0;
    for (std::size_t a = 0; a < c.by_age.size(); ++a) mean += Rational(c.by_age[a] * a);
    EXPECT_EQ(expected_age(n), mean / Rational(c.total));
  }
}

TEST(ExpectedAncestor, Values) {
  EXPECT_EQ(expected_ancestor_size(4, 1), q(3, 2));
  EXPECT_EQ(expected_ancestor_size(5, 1), q(9, 5));
  EXPECT_EQ(expected_ancestor_size(4, 2), 1);
  EXPECT_EQ(expected_ancestor_size(1, 3), 1);
  EXPECT_EQ(expected_ancestor_size(3, 5), 1);
  for (std::uint64_t n = 2; n <= 30; ++n) EXPECT_EQ(expected_ancestor_size(n, 0), n);
}

TEST(AncestorDistribution, Values) {
  const auto d = ancestor_distribution(4, 1);
  EXPECT_EQ(d.support, (std::vector<std::int64_t>{1, 2}));
  EXPECT_EQ(d.mass, (std::vector<Rational>{q(1, 2), q(1, 2)}));
  EXPECT_EQ(ancestor_distribution(5, 1).mass, (std::vector<Rational>{q(1, 5), q(4, 5)}));
  for (std::uint64_t n = 1; n <= 10; ++n) {
    const auto d0 = ancestor_distribution(n, 0);
    EXPECT_EQ(d0.support, std::vector<std::int64_t>{static_cast<std::int64_t>(n)});
    EXPECT_EQ(d0.total_mass(), 1);
  }
}

TEST(AncestorDistribution, CapacityErrorNamesOrder) {
  try {
    ancestor_distribution(20, 1, 16);
    FAIL() << "expected CapacityError";
  } catch (const CapacityError& e) {
    EXPECT_NE(std::string(e.what()).find(">= 20"), std::string::npos) << e.what();
  }
  EXPECT_NO_THROW(ancestor_distribution(20, 1, 20));
}

TEST(AncestorDistribution, AgreesWithBruteForceAndMean) {
  for (std::size_t n = 2; n <= 12; ++n) {
    const Census c = brute_force_census(n, 3);
    for (std::size_t r = 0; r <= 3; ++r) {
      const auto d = ancestor_distribution(n, r, 12);
      EXPECT_EQ(d.total_mass(), 1);
      for (std::size_t m = 0; m <= n; ++m) {
        EXPECT_EQ(d.probability(static_cast<std::int64_t>(m)), Rational(c.by_ancestor_size[r][m], c.total));
      }
      if (r >= 1) EXPECT_EQ(d.mean(), expected_ancestor_size(n, r));
    }
  }
}

TEST(DistributionTable, Serialization) {
  const auto d = age_distribution(5);
  EXPECT_EQ(d.to_csv(), "value,numerator,denominator\n1,1,5\n2,4,5\n");
  const auto j = nlohmann::json::parse(d.to_json());
  EXPECT_EQ(j["kind"], "age");
  EXPECT_EQ(j["mass"][1], "4/5");
  const auto a = nlohmann::json::parse(ancestor_distribution(4, 1).to_json());
  EXPECT_EQ(a["r"], 1);
  EXPECT_EQ(d.probability(7), 0);
}

TEST(MomentReport, Json) {
  MomentReport report{5, 1, q(9, 5), q(4, 25), MomentReport::Source::series};
  const auto j = nlohmann::json::parse(report.to_json());
  EXPECT_EQ(j["expectation"], "9/5");
  EXPECT_EQ(j["variance"], "4/25");
  EXPECT_EQ(j["source"], "series");
  EXPECT_EQ(to_string(MomentReport::Source::brute_force), "brute-force");
}

}  // namespace
}  // namespace cstree
