#include "cstree/numeric.hpp"

namespace cstree {

BigInt binomial(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  BigInt result = 1;
  for (std::int64_t i = 1; i <= b; ++i) {
    result *= a - b + i;
    result /= i;
  }
  return result;
}

BigInt catalan_number(std::uint64_t n) {
  const auto m = static_cast<std::int64_t>(n);
  return binomial(2 * m, m) / (m + 1);
}

std::string to_fraction_string(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

Rational make_rational(const BigInt& num, const BigInt& den) { return Rational(num, den); }

HighFloat to_high_float(const Rational& q) {
  return HighFloat(boost::multiprecision::numerator(q)) /
         HighFloat(boost::multiprecision::denominator(q));
}

}  // namespace cstree
