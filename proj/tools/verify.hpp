#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace cstree::cli {

struct VerifyOptions {
  std::size_t max_size = 12;
  std::size_t max_r = 5;
  std::size_t order = 16;
  /// Test mode: perturbs the reference Catalan table so that checks must fail.
  bool corrupt_catalan = false;
};

struct Check {
  std::string name;
  std::string scope;
  bool passed = false;
  std::string lhs;
  std::string rhs;
};

struct VerifyReport {
  std::vector<Check> checks;

  std::size_t passed() const;
  std::size_t failed() const;
  bool ok() const { return failed() == 0; }

  std::string to_json() const;
  std::string to_csv() const;
  std::string to_text() const;
};

/// Runs every cross-module oracle comparison. Never throws for a failing
/// comparison; an exception inside a check is reported as that check failing.
VerifyReport verify(const VerifyOptions& options);

}  // namespace cstree::cli
