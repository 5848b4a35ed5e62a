#include "cli.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cstree/asymptotics.hpp"
#include "cstree/enumeration.hpp"
#include "cstree/errors.hpp"
#include "cstree/exact_stats.hpp"
#include "cstree/series.hpp"
#include "cstree/tree.hpp"
#include "verify.hpp"

namespace cstree::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { json, csv, text };

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Output {
  Json json;
  Table table;
  /// Replaces the table for csv and text when set.
  std::optional<std::string> raw;
  /// Replaces the table for text only.
  std::optional<std::string> text;
  int status = ExitCode::success;
};

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void write(const Output& output, Format format, std::ostream& out) {
  if (format == Format::json) {
    out << output.json.dump(2) << '\n';
    return;
  }
  if (format == Format::text && output.text) {
    out << *output.text;
    return;
  }
  if (output.raw) {
    out << *output.raw;
    return;
  }
  const auto& t = output.table;
  if (format == Format::csv) {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_cell(cells[i]);
      out << '\n';
    };
    line(t.header);
    for (const auto& row : t.rows) line(row);
    return;
  }
  std::vector<std::size_t> width(t.header.size(), 0);
  auto measure = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i) width[i] = std::max(width[i], cells[i].size());
  };
  measure(t.header);
  for (const auto& row : t.rows) measure(row);
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) s += "  ";
      s += cells[i];
      if (i + 1 < cells.size()) s.append(width[i] - cells[i].size(), ' ');
    }
    out << s << '\n';
  };
  line(t.header);
  for (const auto& row : t.rows) line(row);
}

std::string str(const BigInt& v) { return v.str(); }
std::string str(const HighFloat& v) { return v.str(25); }
std::string str(const Rational& q) { return to_fraction_string(q); }

Output distribution_output(const DistributionTable& table) {
  Output o;
  o.json = Json::parse(table.to_json());
  o.raw = table.to_csv();
  o.table.header = {"value", "probability"};
  for (std::size_t i = 0; i < table.support.size(); ++i) {
    o.table.rows.push_back({std::to_string(table.support[i]), str(table.mass[i])});
  }
  std::ostringstream text;
  write(Output{Json(), o.table, std::nullopt, std::nullopt, 0}, Format::text, text);
  o.text = text.str();
  return o;
}

Output tree_listing(const std::string& key, std::size_t size, const std::vector<PlaneTree>& trees) {
  Output o;
  o.json["size"] = size;
  o.json["count"] = trees.size();
  auto list = Json::array();
  o.table.header = {"index", "tree", "age"};
  for (std::size_t i = 0; i < trees.size(); ++i) {
    const std::string word = trees[i].to_string();
    list.push_back(word);
    o.table.rows.push_back({std::to_string(i), word, std::to_string(age(trees[i]))});
  }
  o.json[key] = std::move(list);
  return o;
}

Json estimate_json(const AsymptoticEstimate& e) { return {{"value", str(e.value)}, {"error", e.order_tag}}; }

// Options shared by the subcommands; each subcommand binds the ones it needs.
struct Options {
  std::string format = "json";
  std::uint64_t seed = 0;
  std::size_t size = 0;
  std::size_t depth = 1;
  std::size_t order = 16;
  std::size_t count = 1;
  std::size_t max_rejections = 1000;
  std::string method = "rejection";
  bool exact = false;
  std::string tree;
  std::string path;
  int precision = 30;
  std::string kind = "T";
  VerifyOptions verify;
};

Output cmd_count(const Options& opt) {
  Output o;
  const BigInt n = count_trees(opt.size);
  o.json = {{"size", opt.size}, {"count", str(n)}};
  o.table = {{"size", "count"}, {{std::to_string(opt.size), str(n)}}};
  o.text = str(n) + "\n";
  return o;
}

Output cmd_enumerate(const Options& opt) {
  std::vector<PlaneTree> trees;
  for (const PlaneTree& t : enumerate_trees(opt.size)) trees.push_back(t);
  return tree_listing("trees", opt.size, trees);
}

Output cmd_sample(const Options& opt) {
  SamplerConfig cfg;
  cfg.size = opt.size;
  cfg.max_rejections = opt.max_rejections;
  cfg.method = opt.method == "rejection" ? SamplingMethod::rejection : SamplingMethod::bijection;
  std::vector<PlaneTree> trees;
  for (std::size_t i = 0; i < opt.count; ++i) {
    cfg.seed = opt.seed + i;
    trees.push_back(sample_tree(cfg));
  }
  Output o = tree_listing("samples", opt.size, trees);
  o.json["seed"] = opt.seed;
  o.json["method"] = opt.method;
  return o;
}

Output single_tree(const std::string& word, const std::optional<std::size_t>& r) {
  const PlaneTree t = parse_tree(word);
  if (!is_catalan_stanley(t)) throw DomainError("tree is not Catalan-Stanley: " + word);
  Output o;
  o.json = {{"tree", word}, {"size", t.size()}, {"age", age(t)}};
  o.table.header = {"tree", "size", "age"};
  o.table.rows.push_back({word, std::to_string(t.size()), std::to_string(age(t))});
  if (r) {
    const PlaneTree a = ancestor(t, *r);
    o.json["r"] = *r;
    o.json["ancestor"] = a.to_string();
    o.json["ancestor_size"] = a.size();
    o.table.header.insert(o.table.header.end(), {"r", "ancestor", "ancestor_size"});
    o.table.rows[0].insert(o.table.rows[0].end(), {std::to_string(*r), a.to_string(), std::to_string(a.size())});
  }
  return o;
}

Output cmd_age(const Options& opt) {
  if (!opt.tree.empty()) return single_tree(opt.tree, std::nullopt);
  if (opt.size == 0) throw DomainError("age: one of --size or --tree is required");
  if (opt.exact) return distribution_output(age_distribution(opt.size));
  MomentReport report{opt.size, std::nullopt, expected_age(opt.size), age_variance(opt.size),
                      MomentReport::Source::formula};
  Output o;
  o.json = Json::parse(report.to_json());
  o.table.header = {"n", "expectation", "variance"};
  o.table.rows.push_back({std::to_string(opt.size), str(report.expectation), str(report.variance)});
  if (opt.size >= 2) {
    const auto mean = expected_age_asym(opt.size);
    const auto var = age_variance_asym(opt.size);
    o.json["expectation_asymptotic"] = estimate_json(mean);
    o.json["variance_asymptotic"] = estimate_json(var);
    o.table.header.insert(o.table.header.end(), {"expectation_asymptotic", "variance_asymptotic"});
    o.table.rows[0].insert(o.table.rows[0].end(), {str(mean.value), str(var.value)});
  }
  return o;
}

Output cmd_ancestor(const Options& opt) {
  if (!opt.tree.empty()) return single_tree(opt.tree, opt.depth);
  if (opt.size == 0) throw DomainError("ancestor: one of --size or --tree is required");
  if (opt.exact) return distribution_output(ancestor_distribution(opt.size, opt.depth, opt.order));
  Output o;
  const Rational mean = expected_ancestor_size(opt.size, opt.depth);
  o.json = {{"n", opt.size}, {"r", opt.depth}, {"expectation", str(mean)}};
  o.table.header = {"n", "r", "expectation", "variance"};
  std::string variance = "";
  if (opt.size <= opt.order) {
    const Rational v = ancestor_distribution(opt.size, opt.depth, opt.order).variance();
    variance = str(v);
    o.json["variance"] = variance;
  } else {
    o.json["variance"] = nullptr;
  }
  o.table.rows.push_back({std::to_string(opt.size), std::to_string(opt.depth), str(mean), variance});
  if (opt.size >= 2) {
    const auto m = expected_ancestor_asym(opt.size, opt.depth);
    const auto v = ancestor_variance_asym(opt.size, opt.depth);
    o.json["expectation_asymptotic"] = estimate_json(m);
    o.json["variance_asymptotic"] = estimate_json(v);
    o.table.header.insert(o.table.header.end(), {"expectation_asymptotic", "variance_asymptotic"});
    o.table.rows[0].insert(o.table.rows[0].end(), {str(m.value), str(v.value)});
  }
  return o;
}

Output cmd_constants(const Options& opt) {
  Output o;
  o.json["precision"] = opt.precision;
  o.json["terms"] = constant_terms_needed(opt.precision);
  o.table.header = {"name", "value"};
  std::string text;
  for (int i = 0; i < 4; ++i) {
    const std::string name = "c" + std::to_string(i);
    const std::string digits = constant_c_digits({i, opt.precision});
    o.json[name] = digits;
    o.table.rows.push_back({name, digits});
    text += name + " = " + digits + "\n";
  }
  o.text = text;
  return o;
}

Output cmd_bijection(const Options& opt) {
  Output o;
  if (opt.tree.empty() == opt.path.empty()) throw DomainError("bijection: exactly one of --tree or --path is required");
  PlaneTree t;
  DyckPath p;
  if (!opt.tree.empty()) {
    t = parse_tree(opt.tree);
    p = tree_to_dyck(t);
  } else {
    p = DyckPath::from_string(opt.path);
    t = dyck_to_tree(p);
  }
  const bool cs = is_catalan_stanley(t);
  o.json = {{"tree", t.to_string()}, {"path", p.to_string()}, {"catalan_stanley", cs}};
  o.table.header = {"tree", "path", "catalan_stanley"};
  o.table.rows.push_back({t.to_string(), p.to_string(), cs ? "true" : "false"});
  o.text = (opt.tree.empty() ? t.to_string() : p.to_string()) + "\n";
  return o;
}

Output cmd_series(const Options& opt) {
  Output o;
  o.json = {{"kind", opt.kind}, {"order", opt.order}};
  if (opt.kind == "F_leq" || opt.kind == "F_geq" || opt.kind == "G") o.json["r"] = opt.depth;
  auto coefficients = Json::array();
  o.table.header = {"n", "m", "coefficient"};
  auto univariate = [&](const TruncatedSeries& f) {
    for (std::size_t n = 0; n <= f.order(); ++n) {
      coefficients.push_back({{"n", n}, {"value", str(f[n])}});
      o.table.rows.push_back({std::to_string(n), "", str(f[n])});
    }
    o.raw = dump_series(f);
  };
  auto bivariate = [&](const BivariateSeries& f) {
    o.json["mark"] = std::string(1, f.mark_name());
    for (std::size_t n = 0; n <= f.order(); ++n) {
      for (std::size_t m = 0; m <= f.order(); ++m) {
        if (!f.in_range(n, m)) continue;
        const Rational c = f.coefficient(n, m);
        coefficients.push_back({{"n", n}, {"m", m}, {"value", str(c)}});
        o.table.rows.push_back({std::to_string(n), std::to_string(m), str(c)});
      }
    }
    o.raw = dump_series(f);
  };
  if (opt.kind == "T") {
    univariate(series_T(opt.order));
  } else if (opt.kind == "S") {
    bivariate(series_S(opt.order));
  } else if (opt.kind == "F_leq") {
    bivariate(series_F_leq(opt.depth, opt.order));
  } else if (opt.kind == "F_geq") {
    univariate(series_F_geq(opt.depth, opt.order));
  } else {
    bivariate(series_G(opt.depth, opt.order));
  }
  o.json["coefficients"] = std::move(coefficients);
  o.text.reset();
  return o;
}

Output cmd_verify(const Options& opt) {
  const VerifyReport report = verify(opt.verify);
  Output o;
  o.json = Json::parse(report.to_json());
  o.raw = report.to_csv();
  o.text = report.to_text();
  o.status = report.ok() ? ExitCode::success : ExitCode::check_failure;
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Catalan-Stanley trees: enumeration, reduction, exact and asymptotic statistics", "cstree"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--seed", opt.seed, "Random seed");

  auto size_option = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--size", opt.size, "Tree size n")->check(CLI::Range(std::size_t{1}, std::size_t{1} << 20));
    if (required) o->required();
  };
  auto depth_option = [&](CLI::App* sub) {
    sub->add_option("--depth", opt.depth, "Reduction depth r")->check(CLI::Range(std::size_t{0}, std::size_t{1} << 20));
  };
  auto order_option = [&](CLI::App* sub) {
    sub->add_option("--order", opt.order, "Series truncation order N")->check(CLI::Range(std::size_t{1}, std::size_t{200}));
  };

  std::map<std::string, Output (*)(const Options&)> handlers;

  auto* count = app.add_subcommand("count", "Number of trees of a size");
  size_option(count, true);
  handlers["count"] = cmd_count;

  auto* enumerate = app.add_subcommand("enumerate", "List all trees of a size in lexicographic order");
  size_option(enumerate, true);
  handlers["enumerate"] = cmd_enumerate;

  auto* sample = app.add_subcommand("sample", "Uniform random trees");
  size_option(sample, true);
  sample->add_option("--count", opt.count, "Number of samples")->check(CLI::Range(std::size_t{1}, std::size_t{1} << 24));
  sample->add_option("--method", opt.method, "Sampler")->check(CLI::IsMember({"rejection", "bijection"}));
  sample->add_option("--max-rejections", opt.max_rejections, "Rejection budget per sample")->check(CLI::PositiveNumber);
  handlers["sample"] = cmd_sample;

  auto* age_cmd = app.add_subcommand("age", "Age of a tree, or age statistics for a size");
  size_option(age_cmd, false);
  age_cmd->add_flag("--exact", opt.exact, "Full exact distribution");
  age_cmd->add_option("--tree", opt.tree, "Tree as a parenthesis word");
  handlers["age"] = cmd_age;

  auto* ancestor_cmd = app.add_subcommand("ancestor", "r-th ancestor of a tree, or ancestor-size statistics");
  size_option(ancestor_cmd, false);
  depth_option(ancestor_cmd);
  order_option(ancestor_cmd);
  ancestor_cmd->add_flag("--exact", opt.exact, "Full exact distribution");
  ancestor_cmd->add_option("--tree", opt.tree, "Tree as a parenthesis word");
  handlers["ancestor"] = cmd_ancestor;

  auto* constants = app.add_subcommand("constants", "Mean and variance constants of the limiting age law");
  constants->add_option("--precision", opt.precision, "Significant digits")
      ->check(CLI::Range(1, ConstantSpec::max_digits));
  handlers["constants"] = cmd_constants;

  auto* bijection = app.add_subcommand("bijection", "Convert between trees and Dyck paths");
  bijection->add_option("--tree", opt.tree, "Tree as a parenthesis word");
  bijection->add_option("--path", opt.path, "Dyck path over {U, D}");
  handlers["bijection"] = cmd_bijection;

  auto* series = app.add_subcommand("series", "Coefficients of a generating function");
  series->add_option("--kind", opt.kind, "Series")->check(CLI::IsMember({"T", "S", "F_leq", "F_geq", "G"}));
  depth_option(series);
  order_option(series);
  handlers["series"] = cmd_series;

  auto* verify_cmd = app.add_subcommand("verify", "Cross-check every formula against brute force");
  verify_cmd->add_option("--max-size", opt.verify.max_size, "Largest enumerated size")
      ->check(CLI::Range(std::size_t{4}, std::size_t{16}));
  verify_cmd->add_option("--max-r", opt.verify.max_r, "Largest reduction depth")
      ->check(CLI::Range(std::size_t{1}, std::size_t{16}));
  verify_cmd->add_option("--order", opt.verify.order, "Series truncation order")
      ->check(CLI::Range(std::size_t{4}, std::size_t{40}));
  verify_cmd->add_flag("--corrupt-catalan", opt.verify.corrupt_catalan, "Perturb the reference table (self-test)");
  handlers["verify"] = cmd_verify;

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ExitCode::success;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ExitCode::success;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::usage_error;
  }

  const Format format = opt.format == "csv" ? Format::csv : opt.format == "text" ? Format::text : Format::json;
  try {
    for (const auto* sub : app.get_subcommands()) {
      const Output output = handlers.at(sub->get_name())(opt);
      write(output, format, out);
      return output.status;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::usage_error;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return ExitCode::check_failure;
  }
  return ExitCode::usage_error;
}

}  // namespace cstree::cli
