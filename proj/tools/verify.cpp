#include "verify.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cstree/asymptotics.hpp"
#include "cstree/enumeration.hpp"
#include "cstree/exact_stats.hpp"
#include "cstree/series.hpp"
#include "cstree/tree.hpp"

namespace cstree::cli {

namespace {

struct Outcome {
  bool passed;
  std::string lhs;
  std::string rhs;
};

// Reference digits of the limiting age constants.
constexpr const char* kReferenceDigits[4] = {
    "2.7182536428679528526648361928219367344585435680344",
    "-4.2220971510158840823821873477600478080816411210406",
    "0.91845604214374797357797147814019496503688953933967",
    "-9.1621753200836274996912436568310268988536534594942",
};

std::string join(const std::vector<std::string>& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ",";
    out += items[i];
  }
  return out + "]";
}

template <typename T>
std::string str(const T& value) {
  std::ostringstream out;
  out << value;
  return out.str();
}

class Runner {
 public:
  void run(std::string name, std::string scope, const std::function<Outcome()>& fn) {
    Check check{std::move(name), std::move(scope), false, "", ""};
    try {
      auto outcome = fn();
      check.passed = outcome.passed;
      check.lhs = std::move(outcome.lhs);
      check.rhs = std::move(outcome.rhs);
    } catch (const std::exception& e) {
      check.lhs = std::string("exception: ") + e.what();
    }
    report.checks.push_back(std::move(check));
  }

  VerifyReport report;
};

// Property over all trees of the given family and sizes; returns the
// first counterexample in lhs.
Outcome for_all_trees(TreeIterator::Family family, std::size_t lo, std::size_t hi,
                      const std::function<bool(const PlaneTree&)>& property) {
  std::uint64_t checked = 0;
  for (std::size_t n = lo; n <= hi; ++n) {
    TreeIterator it(n, family);
    for (const PlaneTree& tree : it) {
      ++checked;
      if (!property(tree)) return {false, "counterexample " + tree.to_string(), "property"};
    }
  }
  return {true, str(checked) + " trees", str(checked) + " trees"};
}

}  // namespace

std::size_t VerifyReport::passed() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.passed; }));
}

std::size_t VerifyReport::failed() const { return checks.size() - passed(); }

std::string VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  auto list = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    list.push_back({{"name", c.name}, {"scope", c.scope}, {"passed", c.passed}, {"lhs", c.lhs}, {"rhs", c.rhs}});
  }
  j["checks"] = std::move(list);
  j["summary"] = {{"total", checks.size()}, {"passed", passed()}, {"failed", failed()}};
  return j.dump(2);
}

std::string VerifyReport::to_csv() const {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
      if (ch == '"') out += '"';
      out += ch;
    }
    return out + "\"";
  };
  std::ostringstream out;
  out << "name,scope,passed,lhs,rhs\n";
  for (const auto& c : checks) {
    out << quote(c.name) << ',' << quote(c.scope) << ',' << (c.passed ? "true" : "false") << ',' << quote(c.lhs)
        << ',' << quote(c.rhs) << '\n';
  }
  return out.str();
}

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << " [" << c.scope << "]";
    if (!c.passed) out << "  lhs=" << c.lhs << "  rhs=" << c.rhs;
    out << '\n';
  }
  out << passed() << "/" << checks.size() << " checks passed\n";
  return out.str();
}

VerifyReport verify(const VerifyOptions& options) {
  const std::size_t max_n = std::max<std::size_t>(options.max_size, 4);
  const std::size_t max_r = std::max<std::size_t>(options.max_r, 1);
  const std::size_t order = std::max<std::size_t>(options.order, 4);
  const std::size_t series_n = std::min(max_n, order);

  std::vector<BigInt> catalan_table;
  for (std::size_t k = 0; k <= max_n + order + 2; ++k) catalan_table.push_back(catalan(k));
  if (options.corrupt_catalan) catalan_table[2] += 1;
  auto expected_count = [&](std::size_t n) { return n == 1 ? BigInt(1) : catalan_table[n - 2]; };

  std::vector<Census> census(max_n + 1);
  for (std::size_t n = 1; n <= max_n; ++n) census[n] = brute_force_census(n, std::max(max_r, n));

  Runner runner;
  const std::string up_to_n = "n<=" + str(max_n);

  runner.run("catalan recurrence", "n<=" + str(catalan_table.size() - 2), [&] {
    for (std::size_t n = 0; n + 1 < catalan_table.size(); ++n) {
      BigInt sum = 0;
      for (std::size_t k = 0; k <= n; ++k) sum += catalan_table[k] * catalan_table[n - k];
      if (sum != catalan_table[n + 1]) return Outcome{false, "C_" + str(n + 1) + "=" + str(catalan_table[n + 1]), str(sum)};
    }
    return Outcome{true, "ok", "ok"};
  });

  runner.run("enumeration count", "2<=" + up_to_n, [&] {
    std::vector<std::string> lhs;
    std::vector<std::string> rhs;
    bool ok = true;
    for (std::size_t n = 2; n <= max_n; ++n) {
      lhs.push_back(str(census[n].total));
      rhs.push_back(str(expected_count(n)));
      ok = ok && BigInt(census[n].total) == expected_count(n) && count_trees(n) == expected_count(n);
    }
    return Outcome{ok, join(lhs), join(rhs)};
  });

  const std::size_t filter_n = std::min<std::size_t>(max_n, 10);
  runner.run("plane-tree filter count", "2<=n<=" + str(filter_n), [&] {
    std::vector<std::string> lhs;
    std::vector<std::string> rhs;
    bool ok = true;
    for (std::size_t n = 2; n <= filter_n; ++n) {
      std::uint64_t count = 0;
      for (const PlaneTree& tree : enumerate_plane_trees(n)) count += is_catalan_stanley(tree) ? 1 : 0;
      lhs.push_back(str(count));
      rhs.push_back(str(expected_count(n)));
      ok = ok && BigInt(count) == expected_count(n);
    }
    return Outcome{ok, join(lhs), join(rhs)};
  });

  runner.run("lexicographic enumeration order", up_to_n, [&] {
    for (std::size_t n = 1; n <= max_n; ++n) {
      std::string previous;
      for (const PlaneTree& tree : enumerate_trees(n)) {
        std::string word = tree.to_string();
        if (!previous.empty() && !(previous < word)) return Outcome{false, previous, word};
        if (!is_catalan_stanley(tree)) return Outcome{false, word, "not Catalan-Stanley"};
        previous = std::move(word);
      }
    }
    return Outcome{true, "ordered", "ordered"};
  });

  const std::size_t bijection_n = std::min<std::size_t>(max_n, 12);
  runner.run("bijection roundtrip", "plane trees n<=" + str(bijection_n),
             [&] { return for_all_trees(TreeIterator::Family::plane, 1, bijection_n, [](const PlaneTree& t) {
                 return dyck_to_tree(tree_to_dyck(t)) == t;
               }); });

  runner.run("parity correspondence", "plane trees n<=" + str(filter_n),
             [&] { return for_all_trees(TreeIterator::Family::plane, 1, filter_n, [](const PlaneTree& t) {
                 return is_catalan_stanley(t) == tree_to_dyck(t).has_odd_returns();
               }); });

  runner.run("reduction closure", up_to_n, [&] {
    return for_all_trees(TreeIterator::Family::catalan_stanley, 1, max_n,
                         [](const PlaneTree& t) { return is_catalan_stanley(reduce(t)); });
  });

  runner.run("size contraction", up_to_n, [&] {
    return for_all_trees(TreeIterator::Family::catalan_stanley, 2, max_n, [](const PlaneTree& t) {
      const std::size_t reduced = reduce(t).size();
      return t.size() == 2 ? reduced == 1 : reduced + 2 <= t.size();
    });
  });

  runner.run("age consistency", up_to_n, [&] {
    return for_all_trees(TreeIterator::Family::catalan_stanley, 1, max_n,
                         [](const PlaneTree& t) { return age(t) == age_by_reduction(t); });
  });

  runner.run("age bounds sharp", "2<=" + up_to_n, [&] {
    for (std::size_t n = 2; n <= max_n; ++n) {
      const auto& c = census[n];
      if (c.by_age[0] != 0 || c.by_age[1] == 0 || c.by_age[n / 2] == 0) {
        return Outcome{false, "n=" + str(n), "1<=age<=" + str(n / 2) + " attained"};
      }
    }
    return Outcome{true, "ok", "ok"};
  });

  runner.run("ancestor bounds hold", "2<=" + up_to_n + ", r>=1", [&] {
    for (std::size_t n = 2; n <= max_n; ++n) {
      const auto& table = census[n].by_ancestor_size;
      for (std::size_t r = 1; r < table.size(); ++r) {
        const std::size_t upper = r <= n / 2 ? n - 2 * r + 1 : 1;
        for (std::size_t m = 0; m < table[r].size(); ++m) {
          if (table[r][m] != 0 && (m < 1 || m > upper)) return Outcome{false, "n=" + str(n) + " r=" + str(r), "m=" + str(m)};
        }
        if (table[r][1] == 0) return Outcome{false, "n=" + str(n) + " r=" + str(r), "size 1 not attained"};
      }
    }
    return Outcome{true, "ok", "ok"};
  });

  // The attained maximum is n - 2r (one less than the proven bound) once
  // n - 2r >= 4; below that it collapses to 2 or 1.
  runner.run("ancestor maximum attained", "2<=" + up_to_n + ", r>=1", [&] {
    for (std::size_t n = 2; n <= max_n; ++n) {
      const auto& table = census[n].by_ancestor_size;
      for (std::size_t r = 1; r < table.size(); ++r) {
        const std::size_t slack = n > 2 * r ? n - 2 * r : 0;
        const std::size_t expected = slack >= 4 ? slack : slack >= 2 ? 2 : 1;
        std::size_t observed = 0;
        for (std::size_t m = 0; m < table[r].size(); ++m) {
          if (table[r][m] != 0) observed = m;
        }
        if (observed != expected) return Outcome{false, "n=" + str(n) + " r=" + str(r) + " max=" + str(observed), str(expected)};
      }
    }
    return Outcome{true, "ok", "ok"};
  });

  runner.run("T functional equation", "order " + str(order), [&] {
    const TruncatedSeries t = series_T(order);
    const TruncatedSeries rhs = TruncatedSeries::monomial(1, 1, order) + t * t;
    return Outcome{t == rhs, "T", "z+T^2"};
  });

  runner.run("T coefficients are Catalan numbers", "order " + str(order), [&] {
    const TruncatedSeries t = series_T(order);
    for (std::size_t n = 1; n <= order; ++n) {
      if (t[n] != Rational(catalan_table[n - 1])) return Outcome{false, "[z^" + str(n) + "]T=" + to_fraction_string(t[n]), str(catalan_table[n - 1])};
    }
    return Outcome{true, "ok", "ok"};
  });

  runner.run("S diagonal counts trees", "order " + str(order), [&] {
    const TruncatedSeries d = series_S(order).diagonal();
    for (std::size_t n = 1; n <= order; ++n) {
      if (d[n] != Rational(expected_count(n))) return Outcome{false, "[z^" + str(n) + "]S(z,z)=" + to_fraction_string(d[n]), str(expected_count(n))};
    }
    return Outcome{true, "ok", "ok"};
  });

  runner.run("expansion fixed point", "order " + str(order), [&] {
    const BivariateSeries s = series_S(order);
    return Outcome{phi_apply(s, order) == s, "Phi(S)", "S"};
  });

  const std::size_t phi_order = std::min<std::size_t>(order, 12);
  runner.run("closed-form iterated expansion", "f in {z,zt,S}, r<=" + str(max_r) + ", order " + str(phi_order), [&] {
    const auto z = BivariateSeries::from_z(TruncatedSeries::monomial(1, 1, phi_order), phi_order);
    const std::vector<std::pair<std::string, BivariateSeries>> inputs = {
        {"z", z}, {"zt", z * BivariateSeries::second(phi_order)}, {"S", series_S(phi_order)}};
    for (const auto& [label, f] : inputs) {
      BivariateSeries iterated = f;
      for (std::size_t r = 0; r <= max_r; ++r) {
        if (phi_power(f, r, phi_order) != iterated) return Outcome{false, "f=" + label + " r=" + str(r), "mismatch"};
        iterated = phi_apply(iterated, phi_order);
      }
    }
    return Outcome{true, "ok", "ok"};
  });

  runner.run("age<=r series equals expansion of z", "r<=" + str(max_r), [&] {
    const auto z = BivariateSeries::from_z(TruncatedSeries::monomial(1, 1, phi_order), phi_order);
    for (std::size_t r = 0; r <= max_r; ++r) {
      if (series_F_leq(r, phi_order) != phi_power(z, r, phi_order)) return Outcome{false, "r=" + str(r), "mismatch"};
    }
    return Outcome{true, "ok", "ok"};
  });

  runner.run("age<=r series telescopes", "order " + str(order), [&] {
    const TruncatedSeries full = series_S(order).diagonal();
    TruncatedSeries previous = series_F_leq(0, order).diagonal();
    for (std::size_t r = 1; r <= order / 2 + 1; ++r) {
      const TruncatedSeries current = series_F_leq(r, order).diagonal();
      for (std::size_t n = 0; n <= order; ++n) {
        if (current[n] < previous[n]) return Outcome{false, "decrease at r=" + str(r) + " n=" + str(n), ""};
      }
      previous = current;
    }
    return Outcome{previous == full, "F_leq(N/2+1)(z,z)", "S(z,z)"};
  });

  runner.run("age>=r series vs complement", "r<=" + str(max_r), [&] {
    const TruncatedSeries full = series_S(order).diagonal();
    for (std::size_t r = 1; r <= max_r; ++r) {
      if (series_F_geq(r, order) != full - series_F_leq(r - 1, order).diagonal()) return Outcome{false, "r=" + str(r), "mismatch"};
    }
    return Outcome{true, "ok", "ok"};
  });

  runner.run("age>=r series vs brute force", "n<=" + str(series_n) + ", all r", [&] {
    for (std::size_t r = 1; r <= series_n / 2 + 1; ++r) {
      const TruncatedSeries f = series_F_geq(r, series_n);
      for (std::size_t n = 2; n <= series_n; ++n) {
        if (f[n] != Rational(census[n].age_at_least(r))) return Outcome{false, "n=" + str(n) + " r=" + str(r) + " series=" + to_fraction_string(f[n]), str(census[n].age_at_least(r))};
      }
    }
    return Outcome{true, "ok", "ok"};
  });

  runner.run("binomial age sum vs brute force", "2<=" + up_to_n + ", all r", [&] {
    for (std::size_t n = 2; n <= max_n; ++n) {
      for (std::size_t r = 1; r <= n / 2 + 1; ++r) {
        if (age_count_geq(n, r) != census[n].age_at_least(r)) return Outcome{false, "n=" + str(n) + " r=" + str(r) + " sum=" + str(age_count_geq(n, r)), str(census[n].age_at_least(r))};
      }
    }
    return Outcome{true, "ok", "ok"};
  });

  runner.run("f(4,2)=1", "n=4, r=2", [&] {
    const BigInt value = age_count_geq(4, 2);
    return Outcome{value == 1 && census[4].age_at_least(2) == 1, str(value), "1"};
  });

  runner.run("expected age formula vs brute force", "2<=" + up_to_n, [&] {
    for (std::size_t n = 2; n <= max_n; ++n) {
      const auto& c = census[n];
      Rational mean = 0;
      for (std::size_t a = 0; a < c.by_age.size(); ++a) mean += Rational(c.by_age[a] * a);
      mean /= Rational(expected_count(n));
      if (expected_age(n) != mean) return Outcome{false, "n=" + str(n) + " formula=" + to_fraction_string(expected_age(n)), to_fraction_string(mean)};
    }
    return Outcome{true, "ok", "ok"};
  });

  runner.run("expected age formula vs tail sum", "2<=n<=200", [&] {
    for (std::size_t n = 2; n <= 200; ++n) {
      if (expected_age(n) != expected_age_from_tails(n)) return Outcome{false, "n=" + str(n), "mismatch"};
    }
    return Outcome{true, "ok", "ok"};
  });

  runner.run("age distribution vs brute force", "2<=" + up_to_n, [&] {
    for (std::size_t n = 2; n <= max_n; ++n) {
      const auto table = age_distribution(n);
      if (table.total_mass() != 1) return Outcome{false, "n=" + str(n), "mass != 1"};
      for (std::size_t a = 0; a < census[n].by_age.size(); ++a) {
        const Rational brute(census[n].by_age[a], expected_count(n));
        if (table.probability(static_cast<std::int64_t>(a)) != brute) return Outcome{false, "n=" + str(n) + " r=" + str(a), to_fraction_string(brute)};
      }
      Rational second = 0;
      for (std::size_t a = 0; a < census[n].by_age.size(); ++a) second += Rational(census[n].by_age[a] * a * a);
      second /= Rational(expected_count(n));
      const Rational mean = expected_age(n);
      if (age_variance(n) != second - mean * mean) return Outcome{false, "variance n=" + str(n), "mismatch"};
    }
    return Outcome{true, "ok", "ok"};
  });

  runner.run("ancestor series vs brute force", "n<=" + str(series_n) + ", r<=" + str(max_r), [&] {
    for (std::size_t r = 0; r <= max_r; ++r) {
      const BivariateSeries g = series_G(r, series_n);
      for (std::size_t n = 1; n <= series_n; ++n) {
        const auto slice = g.slice(n);
        for (std::size_t m = 0; m <= n; ++m) {
          const Rational series = m < slice.size() ? slice[m] : Rational(0);
          if (series != Rational(census[n].by_ancestor_size[r][m])) return Outcome{false, "n=" + str(n) + " r=" + str(r) + " m=" + str(m) + " series=" + to_fraction_string(series), str(census[n].by_ancestor_size[r][m])};
        }
      }
    }
    return Outcome{true, "ok", "ok"};
  });

  runner.run("ancestor series total mass", "n<=" + str(series_n) + ", r<=" + str(max_r), [&] {
    for (std::size_t r = 0; r <= max_r; ++r) {
      const TruncatedSeries marginal = series_G(r, series_n).at_second_one();
      for (std::size_t n = 1; n <= series_n; ++n) {
        if (marginal[n] != Rational(expected_count(n))) return Outcome{false, "n=" + str(n) + " r=" + str(r) + " total=" + to_fraction_string(marginal[n]), str(expected_count(n))};
      }
    }
    return Outcome{true, "ok", "ok"};
  });

  runner.run("expected ancestor formula vs brute force", "2<=" + up_to_n + ", 1<=r<=" + str(max_r), [&] {
    for (std::size_t n = 2; n <= max_n; ++n) {
      for (std::size_t r = 1; r <= max_r; ++r) {
        Rational mean = 0;
        const auto& row = census[n].by_ancestor_size[r];
        for (std::size_t m = 0; m < row.size(); ++m) mean += Rational(row[m] * m);
        mean /= Rational(expected_count(n));
        if (expected_ancestor_size(n, r) != mean) return Outcome{false, "n=" + str(n) + " r=" + str(r) + " formula=" + to_fraction_string(expected_ancestor_size(n, r)), to_fraction_string(mean)};
      }
    }
    return Outcome{true, "ok", "ok"};
  });

  runner.run("ancestor distribution vs brute force", "2<=n<=" + str(series_n) + ", r<=" + str(max_r), [&] {
    for (std::size_t n = 2; n <= series_n; ++n) {
      for (std::size_t r = 0; r <= max_r; ++r) {
        const auto table = ancestor_distribution(n, r, series_n);
        if (table.total_mass() != 1) return Outcome{false, "n=" + str(n) + " r=" + str(r), "mass != 1"};
        for (std::size_t m = 0; m <= n; ++m) {
          const Rational brute(census[n].by_ancestor_size[r][m], expected_count(n));
          if (table.probability(static_cast<std::int64_t>(m)) != brute) return Outcome{false, "n=" + str(n) + " r=" + str(r) + " m=" + str(m), to_fraction_string(brute)};
        }
      }
    }
    return Outcome{true, "ok", "ok"};
  });

  runner.run("odd divisors vs signed divisor sum", "k<=1000", [&] {
    for (std::uint64_t k = 1; k <= 1000; ++k) {
      const auto sign = k % 2 == 1 ? 1 : -1;
      if (sign * static_cast<std::int64_t>(odd_divisor_count(k)) != signed_divisor_sum(k)) return Outcome{false, "k=" + str(k), "mismatch"};
    }
    return Outcome{true, "ok", "ok"};
  });

  for (int index = 0; index < 4; ++index) {
    runner.run("constant c" + str(index) + " digits", "30 significant digits", [&] {
      const std::string computed = constant_c_digits({index, 30});
      const std::string reference = std::string(kReferenceDigits[index]).substr(0, computed.size());
      return Outcome{computed == reference, computed, reference};
    });
  }

  runner.run("limiting age pmf sums to one", "r<=200", [&] {
    HighFloat sum = 0;
    for (std::uint64_t r = 1; r <= 200; ++r) sum += age_tail_limit(r) - age_tail_limit(r + 1);
    const HighFloat error = abs(sum - 1);
    return Outcome{error < HighFloat("1e-10"), str(sum), "1"};
  });

  runner.run("c2 from limiting pmf", "r<=200", [&] {
    HighFloat second = 0;
    for (std::uint64_t r = 1; r <= 200; ++r) second += HighFloat(r * r) * (age_tail_limit(r) - age_tail_limit(r + 1));
    const HighFloat c0 = constant_c({0, 60});
    const HighFloat c2 = constant_c({2, 60});
    const HighFloat via_pmf = second - c0 * c0;
    return Outcome{abs(via_pmf - c2) < HighFloat("1e-25"), via_pmf.str(30), c2.str(30)};
  });

  return std::move(runner.report);
}

}  // namespace cstree::cli
