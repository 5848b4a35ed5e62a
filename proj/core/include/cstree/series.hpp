#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cstree/numeric.hpp"

namespace cstree {

/// Power series in z with exact rational coefficients, truncated at an
/// inclusive order N. Results of binary operations carry the smaller order.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order = 0);
  explicit TruncatedSeries(std::vector<Rational> coefficients);

  static TruncatedSeries constant(const Rational& c, std::size_t order);
  /// c * z^k, truncated.
  static TruncatedSeries monomial(const Rational& c, std::size_t k, std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t k) const { return coeffs_.at(k); }
  Rational& operator[](std::size_t k) { return coeffs_.at(k); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  /// Index of the first nonzero coefficient, or order() + 1 for zero.
  std::size_t valuation() const;
  TruncatedSeries truncated(std::size_t order) const;

  /// Multiplicative inverse; throws DomainError unless the constant term is nonzero.
  TruncatedSeries inverse() const;
  TruncatedSeries pow(std::size_t k) const;
  /// this(inner(z)); inner must have valuation >= 1.
  TruncatedSeries compose(const TruncatedSeries& inner) const;

  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator-=(const TruncatedSeries& rhs);
  TruncatedSeries& operator*=(const Rational& c);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& c) { return a *= c; }
  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a * b.inverse();
  }
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Series in z and a second mark (t or v) with exact rational coefficients.
///
/// The second mark decides the truncation. With `t` (the root-branch mark,
/// later set equal to z) only monomials z^i t^j with i + j <= N are kept.
/// With `v` (the ancestor-size mark) z and v are truncated independently,
/// i <= N and j <= N.
class BivariateSeries {
 public:
  enum class Mark : char { t = 't', v = 'v' };

  explicit BivariateSeries(std::size_t order = 0, Mark mark = Mark::t);

  /// Lifts a series in z (no second-mark dependence).
  static BivariateSeries from_z(const TruncatedSeries& f, std::size_t order, Mark mark = Mark::t);
  /// The second mark itself.
  static BivariateSeries second(std::size_t order, Mark mark = Mark::t);
  static BivariateSeries constant(const Rational& c, std::size_t order, Mark mark = Mark::t);

  std::size_t order() const noexcept { return order_; }
  Mark mark() const noexcept { return mark_; }
  char mark_name() const noexcept { return static_cast<char>(mark_); }
  bool in_range(std::size_t i, std::size_t j) const noexcept;

  /// Coefficient of z^i * mark^j; zero outside the kept range.
  Rational coefficient(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Rational& c);

  BivariateSeries truncated(std::size_t order) const;
  BivariateSeries inverse() const;
  /// this(z, g(z, mark)). Requires g(0, 0) = 0 and, for Mark::v, that every
  /// monomial of g contains z.
  BivariateSeries substitute_second(const BivariateSeries& g) const;

  /// f(z, z) (Mark::t only).
  TruncatedSeries diagonal() const;
  /// f(z, 1) (Mark::v only; finite since j <= N).
  TruncatedSeries at_second_one() const;
  /// Coefficients of z^i as a polynomial in the second mark.
  std::vector<Rational> slice(std::size_t i) const;

  BivariateSeries& operator+=(const BivariateSeries& rhs);
  BivariateSeries& operator-=(const BivariateSeries& rhs);
  BivariateSeries& operator*=(const Rational& c);
  friend BivariateSeries operator+(BivariateSeries a, const BivariateSeries& b) { return a += b; }
  friend BivariateSeries operator-(BivariateSeries a, const BivariateSeries& b) { return a -= b; }
  friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b);
  friend bool operator==(const BivariateSeries& a, const BivariateSeries& b);

 private:
  void require_compatible(const BivariateSeries& rhs) const;

  std::size_t order_;
  Mark mark_;
  // Dense (N + 1) x (N + 1) grid indexed [i][j]; out-of-range cells stay zero.
  std::vector<std::vector<Rational>> grid_;
};

/// T(z): plane trees by size, z + T^2 = T.
TruncatedSeries series_T(std::size_t order);

/// S(z, t) = z + z t / (1 - t - T^2).
BivariateSeries series_S(std::size_t order);

/// The expansion operator: (1 / (1 - t)) f(z, t T^2 / (1 - t)).
BivariateSeries phi_apply(const BivariateSeries& f, std::size_t order);

/// Closed form of the r-fold expansion; r = 0 is the identity.
BivariateSeries phi_power(const BivariateSeries& f, std::size_t r, std::size_t order);

/// Trees of age <= r with root-branch mark t: z / (1 - t Q_r),
/// Q_r = (1 - T^{2r}) / (1 - T^2).
BivariateSeries series_F_leq(std::size_t r, std::size_t order);

/// Trees of age >= r by size: z (1 + T) T^{2r-1} / (1 + T^{2r-1}); r >= 1.
TruncatedSeries series_F_geq(std::size_t r, std::size_t order);

/// Trees by size (z) and size of their r-th ancestor (v).
BivariateSeries series_G(std::size_t r, std::size_t order);

/// CSV dump, one line per coefficient: "n num/den".
std::string dump_series(const TruncatedSeries& f);
/// CSV dump, one line per kept coefficient: "n,m num/den".
std::string dump_series(const BivariateSeries& f);

}  // namespace cstree
