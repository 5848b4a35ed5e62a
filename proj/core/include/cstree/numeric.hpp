#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace cstree {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
/// ~330 bits of mantissa; enough for 60 requested digits plus guard digits.
using HighFloat = boost::multiprecision::cpp_bin_float_100;

/// binom(a, b), zero whenever b < 0, a < 0 or b > a.
BigInt binomial(std::int64_t a, std::int64_t b);

/// C_n = binom(2n, n) / (n + 1).
BigInt catalan_number(std::uint64_t n);

/// "p/q" with q > 0, always including the denominator.
std::string to_fraction_string(const Rational& q);

Rational make_rational(const BigInt& num, const BigInt& den);

HighFloat to_high_float(const Rational& q);

}  // namespace cstree
