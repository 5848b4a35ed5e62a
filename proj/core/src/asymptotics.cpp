#include "cstree/asymptotics.hpp"

#include <cctype>
#include <ios>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "cstree/errors.hpp"

namespace cstree {

namespace {

using boost::multiprecision::pow;

BigInt power_of(unsigned base, std::uint64_t e) { return pow(BigInt(base), static_cast<unsigned>(e)); }

HighFloat ratio(const BigInt& num, const BigInt& den) { return HighFloat(num) / HighFloat(den); }

// Tail of sum_{r > last} 400 r^4 / 4^r. For r >= 8 consecutive majorant
// terms shrink by at least (9/8)^4 / 4 < 0.41, hence the geometric bound.
HighFloat tail_majorant(std::size_t last) {
  const HighFloat next = last + 1;
  return HighFloat(400) * pow(next, 4) / pow(HighFloat(4), static_cast<unsigned>(last + 1)) / HighFloat(0.59);
}

struct Sums {
  HighFloat tail_sum;            // sum A(r)
  HighFloat correction_sum;      // sum B(r)
  HighFloat weighted_tail;       // sum (2r - 1) A(r)
  HighFloat weighted_correction; // sum (2r - 1) B(r)
};

Sums partial_sums(std::size_t terms) {
  Sums s;
  for (std::uint64_t r = 1; r <= terms; ++r) {
    const HighFloat a = age_tail_limit(r);
    const HighFloat b = age_tail_correction(r);
    s.tail_sum += a;
    s.correction_sum += b;
    s.weighted_tail += (2 * r - 1) * a;
    s.weighted_correction += (2 * r - 1) * b;
  }
  return s;
}

HighFloat sqrt_pi() { return sqrt(boost::math::constants::pi<HighFloat>()); }

}  // namespace

HighFloat age_tail_limit(std::uint64_t r) {
  const BigInt p4 = power_of(4, r);
  const BigInt num = 4 * (p4 * (3 * r - 1) + 1);
  const BigInt den = (p4 + 2) * (p4 + 2);
  return ratio(num, den);
}

HighFloat age_tail_correction(std::uint64_t r) {
  const BigInt rr = r;
  const BigInt r2 = rr * rr;
  const BigInt r3 = r2 * rr;
  const BigInt p4 = power_of(4, r);
  const BigInt p16 = p4 * p4;
  const BigInt p64 = p16 * p4;
  const BigInt num = 6 * p64 * (2 * r3 - 5 * r2 + 4 * rr - 1) - 6 * p16 * (16 * r3 - 24 * r2 + 10 * rr - 1) +
                     24 * p4 * (2 * r3 - r2);
  const BigInt base = p4 + 2;
  return ratio(num, base * base * base * base);
}

std::size_t constant_terms_needed(int digits) {
  const HighFloat target = pow(HighFloat(10), -(digits + 5));
  std::size_t terms = 8;
  while (tail_majorant(terms) >= target) ++terms;
  return terms;
}

HighFloat constant_c(const ConstantSpec& spec) {
  if (spec.requested_digits > ConstantSpec::max_digits) {
    throw CapacityError("constant_c: at most " + std::to_string(ConstantSpec::max_digits) + " digits supported");
  }
  if (spec.requested_digits < 1) throw DomainError("constant_c: requested_digits must be positive");
  const Sums s = partial_sums(constant_terms_needed(spec.requested_digits));
  const HighFloat c0 = s.tail_sum;
  const HighFloat c1 = -s.correction_sum;
  switch (spec.index) {
    case 0:
      return c0;
    case 1:
      return c1;
    case 2:
      return s.weighted_tail - c0 * c0;
    case 3:
      return -s.weighted_correction - 2 * c0 * c1;
    default:
      throw DomainError("constant_c: index must be 0..3");
  }
}

std::string constant_c_digits(const ConstantSpec& spec) {
  const HighFloat value = constant_c(spec);
  const std::string fixed = value.str(spec.requested_digits + 15, std::ios_base::fixed);
  std::string out;
  int significant = 0;
  for (char ch : fixed) {
    if (significant == spec.requested_digits) break;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      if (significant > 0 || ch != '0') ++significant;
    }
    out.push_back(ch);
  }
  return out;
}

AsymptoticEstimate prob_age_asym(std::uint64_t n, std::uint64_t r) {
  if (n < 2 || r < 1) throw DomainError("prob_age_asym: requires n >= 2 and r >= 1");
  const HighFloat leading = age_tail_limit(r) - age_tail_limit(r + 1);
  const HighFloat correction = age_tail_correction(r) - age_tail_correction(r + 1);
  return {leading - correction / n, "O(n^-2)", 2};
}

AsymptoticEstimate expected_age_asym(std::uint64_t n) {
  if (n < 2) throw DomainError("expected_age_asym: requires n >= 2");
  static const HighFloat c0 = constant_c({0, ConstantSpec::max_digits});
  static const HighFloat c1 = constant_c({1, ConstantSpec::max_digits});
  return {c0 + c1 / n, "O(n^-2)", 2};
}

AsymptoticEstimate age_variance_asym(std::uint64_t n) {
  if (n < 2) throw DomainError("age_variance_asym: requires n >= 2");
  static const HighFloat c2 = constant_c({2, ConstantSpec::max_digits});
  static const HighFloat c3 = constant_c({3, ConstantSpec::max_digits});
  return {c2 + c3 / n, "O(n^-2)", 2};
}

AsymptoticEstimate expected_ancestor_asym(std::uint64_t n, std::uint64_t r) {
  if (n < 2) throw DomainError("expected_ancestor_asym: requires n >= 2");
  const BigInt p4 = power_of(4, r);
  const BigInt rr = r;
  const HighFloat nn = n;
  const HighFloat linear = nn / HighFloat(p4);
  const HighFloat constant = ratio(2 * p4 - 2 * rr * rr + rr - 2, 2 * p4);
  const HighFloat inverse = ratio((2 * rr + 1) * (2 * rr - 1) * (rr - 3) * rr, 2 * p4 * 4) / nn;
  return {linear + constant + inverse, "O(n^-3/2)", 3};
}

AsymptoticEstimate ancestor_variance_asym(std::uint64_t n, std::uint64_t r) {
  if (n < 2) throw DomainError("ancestor_variance_asym: requires n >= 2");
  const BigInt p2 = power_of(2, r);
  const BigInt p4 = p2 * p2;
  const BigInt p16 = p4 * p4;
  const BigInt rr = r;
  const HighFloat nn = n;
  const BigInt shape = p4 * (3 * rr + 1) - 1;
  const HighFloat quadratic = ratio((p2 + 1) * (p2 - 1), p16) * nn * nn;
  const HighFloat three_halves = sqrt_pi() * ratio(shape, 3 * p16) * nn * sqrt(nn);
  const HighFloat linear =
      ratio(18 * p4 * rr * rr + 3 * p4 * rr - 38 * p4 + 36 * rr * rr - 42 * rr + 38, 18 * p16) * nn;
  const HighFloat half = 5 * sqrt_pi() * ratio(shape, 8 * p16) * sqrt(nn);
  return {quadratic - three_halves + linear + half, "O(1)", 4};
}

}  // namespace cstree
