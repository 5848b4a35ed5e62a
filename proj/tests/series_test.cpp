#include <gtest/gtest.h>

#include "cstree/enumeration.hpp"
#include "cstree/errors.hpp"
#include "cstree/series.hpp"

namespace cstree {
namespace {

std::vector<Rational> rationals(std::initializer_list<int> values) {
  std::vector<Rational> out;
  for (int v : values) out.emplace_back(v);
  return out;
}

BivariateSeries z_series(std::size_t order, BivariateSeries::Mark mark = BivariateSeries::Mark::t) {
  return BivariateSeries::from_z(TruncatedSeries::monomial(1, 1, order), order, mark);
}

// z / (1 - t) truncated to total degree N.
BivariateSeries z_over_one_minus_t(std::size_t order) {
  BivariateSeries f(order);
  for (std::size_t j = 0; j + 1 <= order; ++j) f.set(1, j, 1);
  return f;
}

TEST(TruncatedSeries, Arithmetic) {
  const TruncatedSeries a(rationals({1, 2, 3}));
  const TruncatedSeries b(rationals({0, 1, 0}));
  EXPECT_EQ((a + b).coefficients(), rationals({1, 3, 3}));
  EXPECT_EQ((a - b).coefficients(), rationals({1, 1, 3}));
  EXPECT_EQ((a * b).coefficients(), rationals({0, 1, 2}));
  EXPECT_EQ((a * Rational(1, 2))[2], Rational(3, 2));
  EXPECT_EQ(b.valuation(), 1u);
  EXPECT_EQ(TruncatedSeries(3).valuation(), 4u);
  EXPECT_EQ(((a / a) - TruncatedSeries::constant(1, 2)).valuation(), 3u);
  EXPECT_EQ(a.truncated(1).coefficients(), rationals({1, 2}));
}

TEST(TruncatedSeries, OrderIsMinimumOfOperands) {
  const TruncatedSeries a(rationals({1, 1, 1, 1}));
  const TruncatedSeries b(rationals({1, 1}));
  EXPECT_EQ((a * b).order(), 1u);
  EXPECT_EQ((a + b).order(), 1u);
}

TEST(TruncatedSeries, InverseAndCompose) {
  const TruncatedSeries one_minus_z(rationals({1, -1, 0, 0, 0}));
  EXPECT_EQ(one_minus_z.inverse().coefficients(), rationals({1, 1, 1, 1, 1}));
  EXPECT_THROW(TruncatedSeries(rationals({0, 1})).inverse(), DomainError);
  // 1 / (1 - z) composed with 2z is 1 / (1 - 2z).
  const TruncatedSeries geometric = one_minus_z.inverse();
  const TruncatedSeries doubled(rationals({0, 2, 0, 0, 0}));
  EXPECT_EQ(geometric.compose(doubled).coefficients(), rationals({1, 2, 4, 8, 16}));
  EXPECT_THROW(geometric.compose(geometric), DomainError);
  EXPECT_EQ(doubled.pow(2).coefficients(), rationals({0, 0, 4, 0, 0}));
  EXPECT_EQ(doubled.pow(0).coefficients(), rationals({1, 0, 0, 0, 0}));
}

TEST(SeriesT, Values) {
  EXPECT_EQ(series_T(0).coefficients(), rationals({0}));
  EXPECT_EQ(series_T(5).coefficients(), rationals({0, 1, 1, 2, 5, 14}));
  const TruncatedSeries t = series_T(30);
  EXPECT_EQ(TruncatedSeries::monomial(1, 1, 30) + t * t, t);
  for (std::size_t n = 1; n <= 30; ++n) EXPECT_EQ(t[n], Rational(catalan(n - 1)));
}

TEST(SeriesS, Values) {
  const BivariateSeries s = series_S(6);
  EXPECT_EQ(s.diagonal().coefficients(), rationals({0, 1, 1, 1, 2, 5, 14}));
  EXPECT_EQ(s.coefficient(1, 0), 1);
  EXPECT_EQ(s.coefficient(1, 1), 1);
  EXPECT_EQ(s.coefficient(0, 0), 0);
  EXPECT_EQ(s.mark_name(), 't');
}

TEST(BivariateSeries, TruncationByMark) {
  BivariateSeries t(4);
  EXPECT_TRUE(t.in_range(2, 2));
  EXPECT_FALSE(t.in_range(3, 2));
  EXPECT_EQ(t.coefficient(3, 2), 0);
  EXPECT_THROW(t.set(3, 2, 1), CapacityError);
  BivariateSeries v(4, BivariateSeries::Mark::v);
  EXPECT_TRUE(v.in_range(4, 4));
  EXPECT_FALSE(v.in_range(5, 0));
  EXPECT_THROW(t.at_second_one(), DomainError);
  EXPECT_THROW(v.diagonal(), DomainError);
}

TEST(BivariateSeries, ProductAndInverse) {
  const auto z = z_series(5);
  const auto t = BivariateSeries::second(5);
  const auto one = BivariateSeries::constant(1, 5);
  const auto geometric = (one - t).inverse();
  EXPECT_EQ(z * geometric, z_over_one_minus_t(5));
  EXPECT_EQ(geometric * (one - t), one);
  EXPECT_THROW(z.inverse(), DomainError);
}

TEST(BivariateSeries, MismatchedOperands) {
  EXPECT_THROW(z_series(4) + z_series(4, BivariateSeries::Mark::v), DomainError);
}

TEST(PhiApply, Examples) {
  const std::size_t order = 10;
  EXPECT_EQ(phi_apply(z_series(order), order), z_over_one_minus_t(order));
  const auto zt = z_series(order) * BivariateSeries::second(order);
  EXPECT_EQ(phi_apply(zt, order).coefficient(3, 1), 1);
  for (std::size_t n = 1; n <= 20; ++n) EXPECT_EQ(phi_apply(series_S(n), n), series_S(n)) << "N=" << n;
}

TEST(PhiPower, Examples) {
  const std::size_t order = 12;
  const auto z = z_series(order);
  EXPECT_EQ(phi_power(z, 0, order), z);
  EXPECT_EQ(phi_power(series_S(order), 0, order), series_S(order));
  EXPECT_EQ(phi_power(z, 1, order), z_over_one_minus_t(order));
  EXPECT_EQ(phi_power(z, 3, order), phi_apply(phi_apply(phi_apply(z, order), order), order));
}

TEST(PhiPower, MatchesIteration) {
  const std::size_t order = 12;
  const auto z = z_series(order);
  for (const auto& f : {z, z * BivariateSeries::second(order), series_S(order)}) {
    BivariateSeries iterated = f;
    for (std::size_t r = 0; r <= 5; ++r) {
      EXPECT_EQ(phi_power(f, r, order), iterated) << "r=" << r;
      iterated = phi_apply(iterated, order);
    }
  }
}

TEST(SeriesFLeq, Examples) {
  const std::size_t order = 14;
  EXPECT_EQ(series_F_leq(0, order), z_series(order));
  const TruncatedSeries d1 = series_F_leq(1, order).diagonal();
  for (std::size_t n = 1; n <= order; ++n) EXPECT_EQ(d1[n], 1);
  const TruncatedSeries d = series_F_leq(order / 2, order).diagonal();
  for (std::size_t n = 1; n <= order; ++n) EXPECT_EQ(d[n], Rational(count_trees(n)));
  for (std::size_t r = 0; r <= 5; ++r) EXPECT_EQ(series_F_leq(r, order), phi_power(z_series(order), r, order));
}

TEST(SeriesFGeq, Examples) {
  EXPECT_EQ(series_F_geq(1, 6).coefficients(), rationals({0, 0, 1, 1, 2, 5, 14}));
  EXPECT_EQ(series_F_geq(2, 6)[4], 1);
  EXPECT_EQ(series_F_geq(2, 6)[5], 4);
  EXPECT_THROW(series_F_geq(0, 6), DomainError);
}

TEST(SeriesFGeq, MatchesBruteForce) {
  const std::size_t order = 13;
  std::vector<Census> census;
  for (std::size_t n = 0; n <= order; ++n) census.push_back(n == 0 ? Census{} : brute_force_census(n, 7));
  for (std::size_t r = 1; r <= 7; ++r) {
    const TruncatedSeries f = series_F_geq(r, order);
    for (std::size_t n = 2; n <= order; ++n) EXPECT_EQ(f[n], Rational(census[n].age_at_least(r))) << n << "," << r;
  }
}

TEST(SeriesG, Examples) {
  const std::size_t order = 10;
  const BivariateSeries g0 = series_G(0, order);
  EXPECT_EQ(g0.mark_name(), 'v');
  for (std::size_t n = 1; n <= order; ++n) {
    for (std::size_t m = 0; m <= order; ++m) {
      EXPECT_EQ(g0.coefficient(n, m), m == n ? Rational(count_trees(n)) : Rational(0));
    }
  }
  const auto slice = series_G(1, order).slice(4);
  EXPECT_EQ(slice[1], 1);
  EXPECT_EQ(slice[2], 1);
  EXPECT_EQ(slice[3], 0);
  EXPECT_EQ(slice[4], 0);
  for (std::size_t r = 0; r <= 4; ++r) {
    const TruncatedSeries marginal = series_G(r, order).at_second_one();
    for (std::size_t n = 1; n <= order; ++n) EXPECT_EQ(marginal[n], Rational(count_trees(n)));
  }
}

TEST(SeriesG, MatchesBruteForce) {
  const std::size_t order = 13;
  for (std::size_t n = 1; n <= order; ++n) {
    const Census c = brute_force_census(n, 3);
    for (std::size_t r = 0; r <= 3; ++r) {
      const auto slice = series_G(r, order).slice(n);
      for (std::size_t m = 1; m <= n; ++m) EXPECT_EQ(slice[m], Rational(c.by_ancestor_size[r][m])) << n << "," << r << "," << m;
    }
  }
}

TEST(DumpSeries, Format) {
  EXPECT_EQ(dump_series(series_T(3)), "0 0/1\n1 1/1\n2 1/1\n3 2/1\n");
  const std::string dump = dump_series(series_S(2));
  EXPECT_EQ(dump.substr(0, dump.find('\n')), "0,0 0/1");
  EXPECT_NE(dump.find("1,1 1/1\n"), std::string::npos);
}

}  // namespace
}  // namespace cstree
