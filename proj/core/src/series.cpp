#include "cstree/series.hpp"

#include <algorithm>
#include <sstream>

#include "cstree/errors.hpp"

namespace cstree {

// --- TruncatedSeries -------------------------------------------------------

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) coeffs_.resize(1);
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, std::size_t order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::monomial(const Rational& c, std::size_t k, std::size_t order) {
  TruncatedSeries s(order);
  if (k <= order) s.coeffs_[k] = c;
  return s;
}

std::size_t TruncatedSeries::valuation() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) return k;
  }
  return coeffs_.size();
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  std::vector<Rational> c(order + 1);
  for (std::size_t k = 0; k <= std::min(order, this->order()); ++k) c[k] = coeffs_[k];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (coeffs_[0] == 0) throw DomainError("series inverse: constant term is zero");
  const std::size_t n = order();
  TruncatedSeries g(n);
  const Rational inv0 = 1 / coeffs_[0];
  g.coeffs_[0] = inv0;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      if (coeffs_[i] != 0) acc += coeffs_[i] * g.coeffs_[k - i];
    }
    g.coeffs_[k] = -acc * inv0;
  }
  return g;
}

TruncatedSeries TruncatedSeries::pow(std::size_t k) const {
  TruncatedSeries result = constant(1, order());
  TruncatedSeries base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

TruncatedSeries TruncatedSeries::compose(const TruncatedSeries& inner) const {
  if (inner.coeffs_[0] != 0) throw DomainError("series compose: inner series must have valuation >= 1");
  const std::size_t n = std::min(order(), inner.order());
  TruncatedSeries result = constant(coeffs_[n], n);
  for (std::size_t k = n; k-- > 0;) {
    result = result * inner;
    result.coeffs_[0] += coeffs_[k];
  }
  return result;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  if (rhs.order() < order()) coeffs_.resize(rhs.order() + 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
  if (rhs.order() < order()) coeffs_.resize(rhs.order() + 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  TruncatedSeries r(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (b.coeffs_[j] != 0) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return r;
}

// --- BivariateSeries -------------------------------------------------------

BivariateSeries::BivariateSeries(std::size_t order, Mark mark)
    : order_(order), mark_(mark), grid_(order + 1, std::vector<Rational>(order + 1)) {}

BivariateSeries BivariateSeries::from_z(const TruncatedSeries& f, std::size_t order, Mark mark) {
  BivariateSeries s(order, mark);
  for (std::size_t i = 0; i <= std::min(order, f.order()); ++i) s.grid_[i][0] = f[i];
  return s;
}

BivariateSeries BivariateSeries::second(std::size_t order, Mark mark) {
  BivariateSeries s(order, mark);
  if (order >= 1) s.grid_[0][1] = 1;
  return s;
}

BivariateSeries BivariateSeries::constant(const Rational& c, std::size_t order, Mark mark) {
  BivariateSeries s(order, mark);
  s.grid_[0][0] = c;
  return s;
}

bool BivariateSeries::in_range(std::size_t i, std::size_t j) const noexcept {
  if (mark_ == Mark::t) return i + j <= order_;
  return i <= order_ && j <= order_;
}

Rational BivariateSeries::coefficient(std::size_t i, std::size_t j) const {
  return in_range(i, j) ? grid_[i][j] : Rational(0);
}

void BivariateSeries::set(std::size_t i, std::size_t j, const Rational& c) {
  if (!in_range(i, j)) throw CapacityError("coefficient index outside the truncation range");
  grid_[i][j] = c;
}

BivariateSeries BivariateSeries::truncated(std::size_t order) const {
  BivariateSeries s(order, mark_);
  for (std::size_t i = 0; i <= order; ++i) {
    for (std::size_t j = 0; j <= order; ++j) {
      if (s.in_range(i, j) && in_range(i, j)) s.grid_[i][j] = grid_[i][j];
    }
  }
  return s;
}

void BivariateSeries::require_compatible(const BivariateSeries& rhs) const {
  if (order_ != rhs.order_ || mark_ != rhs.mark_) {
    throw DomainError("bivariate series differ in order or second mark");
  }
}

BivariateSeries& BivariateSeries::operator+=(const BivariateSeries& rhs) {
  require_compatible(rhs);
  for (std::size_t i = 0; i <= order_; ++i) {
    for (std::size_t j = 0; j <= order_; ++j) grid_[i][j] += rhs.grid_[i][j];
  }
  return *this;
}

BivariateSeries& BivariateSeries::operator-=(const BivariateSeries& rhs) {
  require_compatible(rhs);
  for (std::size_t i = 0; i <= order_; ++i) {
    for (std::size_t j = 0; j <= order_; ++j) grid_[i][j] -= rhs.grid_[i][j];
  }
  return *this;
}

BivariateSeries& BivariateSeries::operator*=(const Rational& c) {
  for (auto& row : grid_) {
    for (auto& x : row) x *= c;
  }
  return *this;
}

BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
  a.require_compatible(b);
  BivariateSeries r(a.order_, a.mark_);
  const std::size_t n = a.order_;
  for (std::size_t i1 = 0; i1 <= n; ++i1) {
    for (std::size_t j1 = 0; j1 <= n; ++j1) {
      const Rational& x = a.grid_[i1][j1];
      if (x == 0) continue;
      for (std::size_t i2 = 0; i1 + i2 <= n; ++i2) {
        for (std::size_t j2 = 0; j1 + j2 <= n; ++j2) {
          if (!r.in_range(i1 + i2, j1 + j2)) break;
          const Rational& y = b.grid_[i2][j2];
          if (y != 0) r.grid_[i1 + i2][j1 + j2] += x * y;
        }
      }
    }
  }
  return r;
}

bool operator==(const BivariateSeries& a, const BivariateSeries& b) {
  return a.order_ == b.order_ && a.mark_ == b.mark_ && a.grid_ == b.grid_;
}

BivariateSeries BivariateSeries::inverse() const {
  if (grid_[0][0] == 0) throw DomainError("series inverse: constant term is zero");
  BivariateSeries g(order_, mark_);
  const Rational inv0 = 1 / grid_[0][0];
  // Lexicographic (i, j) order visits every (i - a, j - b) before (i, j).
  for (std::size_t i = 0; i <= order_; ++i) {
    for (std::size_t j = 0; j <= order_ && in_range(i, j); ++j) {
      if (i == 0 && j == 0) {
        g.grid_[0][0] = inv0;
        continue;
      }
      Rational acc = 0;
      for (std::size_t a = 0; a <= i; ++a) {
        for (std::size_t b = 0; b <= j; ++b) {
          if ((a == 0 && b == 0) || grid_[a][b] == 0) continue;
          acc += grid_[a][b] * g.grid_[i - a][j - b];
        }
      }
      g.grid_[i][j] = -acc * inv0;
    }
  }
  return g;
}

BivariateSeries BivariateSeries::substitute_second(const BivariateSeries& g) const {
  require_compatible(g);
  if (g.grid_[0][0] != 0) throw DomainError("substitute: inner series has a constant term");
  if (mark_ == Mark::v) {
    for (std::size_t j = 0; j <= order_; ++j) {
      if (g.grid_[0][j] != 0) throw DomainError("substitute: every monomial of the inner series must contain z");
    }
  }
  auto column = [&](std::size_t j) {
    BivariateSeries c(order_, mark_);
    for (std::size_t i = 0; i <= order_; ++i) {
      if (in_range(i, j)) c.grid_[i][0] = grid_[i][j];
    }
    return c;
  };
  BivariateSeries result = column(order_);
  for (std::size_t j = order_; j-- > 0;) result = result * g + column(j);
  return result;
}

TruncatedSeries BivariateSeries::diagonal() const {
  if (mark_ != Mark::t) throw DomainError("diagonal requires the t mark");
  TruncatedSeries d(order_);
  for (std::size_t i = 0; i <= order_; ++i) {
    for (std::size_t j = 0; i + j <= order_; ++j) d[i + j] += grid_[i][j];
  }
  return d;
}

TruncatedSeries BivariateSeries::at_second_one() const {
  if (mark_ != Mark::v) throw DomainError("evaluation at 1 requires the v mark");
  TruncatedSeries d(order_);
  for (std::size_t i = 0; i <= order_; ++i) {
    for (std::size_t j = 0; j <= order_; ++j) d[i] += grid_[i][j];
  }
  return d;
}

std::vector<Rational> BivariateSeries::slice(std::size_t i) const {
  if (i > order_) throw CapacityError("slice: z-degree exceeds series order " + std::to_string(order_));
  std::vector<Rational> out;
  for (std::size_t j = 0; j <= order_ && in_range(i, j); ++j) out.push_back(grid_[i][j]);
  return out;
}

// --- Generating functions --------------------------------------------------

TruncatedSeries series_T(std::size_t order) {
  TruncatedSeries t(order);
  for (std::size_t n = 1; n <= order; ++n) {
    Rational acc = n == 1 ? 1 : 0;
    for (std::size_t k = 1; k < n; ++k) acc += t[k] * t[n - k];
    t[n] = acc;
  }
  return t;
}

namespace {

using Mark = BivariateSeries::Mark;

TruncatedSeries z_series(std::size_t order) { return TruncatedSeries::monomial(1, 1, order); }

// (1 - T^{2r}) / (1 - T^2) = 1 + T^2 + ... + T^{2r-2}.
TruncatedSeries geometric_T_squares(std::size_t r, std::size_t order) {
  const TruncatedSeries t2 = series_T(order).pow(2);
  const TruncatedSeries one = TruncatedSeries::constant(1, order);
  return (one - t2.pow(r)) / (one - t2);
}

}  // namespace

BivariateSeries series_S(std::size_t order) {
  const auto z = BivariateSeries::from_z(z_series(order), order);
  const auto t = BivariateSeries::second(order);
  const auto one = BivariateSeries::constant(1, order);
  const auto t2 = BivariateSeries::from_z(series_T(order).pow(2), order);
  return z + z * t * (one - t - t2).inverse();
}

BivariateSeries phi_apply(const BivariateSeries& f, std::size_t order) {
  if (f.mark() != Mark::t) throw DomainError("phi_apply: series must use the t mark");
  const BivariateSeries g = f.truncated(order);
  const auto t = BivariateSeries::second(order);
  const auto one = BivariateSeries::constant(1, order);
  const auto t2 = BivariateSeries::from_z(series_T(order).pow(2), order);
  const auto geometric = (one - t).inverse();
  return geometric * g.substitute_second(t * t2 * geometric);
}

BivariateSeries phi_power(const BivariateSeries& f, std::size_t r, std::size_t order) {
  if (f.mark() != Mark::t) throw DomainError("phi_power: series must use the t mark");
  const BivariateSeries g = f.truncated(order);
  // The closed form reads 0/0 at r = 0; the zero-fold expansion is the identity.
  if (r == 0) return g;
  const auto t = BivariateSeries::second(order);
  const auto one = BivariateSeries::constant(1, order);
  const auto q = BivariateSeries::from_z(geometric_T_squares(r, order), order);
  const auto t2r = BivariateSeries::from_z(series_T(order).pow(2 * r), order);
  const auto denominator_inv = (one - t * q).inverse();
  return denominator_inv * g.substitute_second(t * t2r * denominator_inv);
}

BivariateSeries series_F_leq(std::size_t r, std::size_t order) {
  const auto z = BivariateSeries::from_z(z_series(order), order);
  if (r == 0) return z;
  const auto t = BivariateSeries::second(order);
  const auto one = BivariateSeries::constant(1, order);
  const auto q = BivariateSeries::from_z(geometric_T_squares(r, order), order);
  return z * (one - t * q).inverse();
}

TruncatedSeries series_F_geq(std::size_t r, std::size_t order) {
  if (r == 0) throw DomainError("series_F_geq: r must be at least 1");
  const TruncatedSeries T = series_T(order);
  const TruncatedSeries one = TruncatedSeries::constant(1, order);
  const TruncatedSeries power = T.pow(2 * r - 1);
  return z_series(order) * (one + T) * power / (one + power);
}

BivariateSeries series_G(std::size_t r, std::size_t order) {
  const TruncatedSeries T = series_T(order);
  const TruncatedSeries one = TruncatedSeries::constant(1, order);
  const TruncatedSeries z = z_series(order);
  TruncatedSeries prefactor = one;
  TruncatedSeries marked = z;  // z T^{2r} / (1 - z Q_r)
  if (r > 0) {
    prefactor = (one - z * geometric_T_squares(r, order)).inverse();
    marked = z * T.pow(2 * r) * prefactor;
  }
  BivariateSeries zv(order, Mark::v);
  BivariateSeries t_zv(order, Mark::v);  // T(zv)
  for (std::size_t k = 1; k <= order; ++k) t_zv.set(k, k, T[k]);
  if (order >= 1) zv.set(1, 1, 1);
  BivariateSeries y(order, Mark::v);
  if (order >= 1) {
    for (std::size_t i = 0; i <= order; ++i) y.set(i, 1, marked[i]);
  }
  const auto unit = BivariateSeries::constant(1, order, Mark::v);
  const auto s = zv + zv * y * (unit - y - t_zv * t_zv).inverse();
  return BivariateSeries::from_z(prefactor, order, Mark::v) * s;
}

std::string dump_series(const TruncatedSeries& f) {
  std::ostringstream out;
  for (std::size_t n = 0; n <= f.order(); ++n) out << n << ' ' << to_fraction_string(f[n]) << '\n';
  return out.str();
}

std::string dump_series(const BivariateSeries& f) {
  std::ostringstream out;
  for (std::size_t n = 0; n <= f.order(); ++n) {
    for (std::size_t m = 0; m <= f.order() && f.in_range(n, m); ++m) {
      out << n << ',' << m << ' ' << to_fraction_string(f.coefficient(n, m)) << '\n';
    }
  }
  return out.str();
}

}  // namespace cstree
