#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace figurate::cli {

enum class CheckStatus { pass, fail, skipped };

std::string_view to_string(CheckStatus status);

struct CheckResult {
  std::string suite;
  long p = 0;    // 0 for checks not tied to a single row
  long ell = -1; // -1 when not tied to a single entry
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

struct VerifyReport {
  std::string version;
  std::vector<std::string> suites;
  long pmax = 0;
  long size_guard = 0;
  std::vector<CheckResult> checks;  // sorted by suite, p, ell
  double seconds = 0.0;

  std::size_t count(CheckStatus status) const;
  bool ok() const { return count(CheckStatus::fail) == 0; }
};

/// Names accepted by verify, "all" excluded.
const std::vector<std::string>& suite_names();

/// Runs the named suites up to pmax. "all" expands to every suite.
/// Throws std::invalid_argument for an unknown suite name or pmax < 1.
VerifyReport verify(const std::vector<std::string>& suites, long pmax, long size_guard);

}  // namespace figurate::cli
