#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace figurate::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

enum class OutputFormat { plain, csv, json };

/// Everything one invocation needs, validated before dispatch.
struct RunConfig {
  std::string command;
  OutputFormat format = OutputFormat::plain;
  long size_guard = 14;
  std::string output;  // empty: stdout

  std::optional<long> p;
  std::optional<long> ell;
  std::optional<std::string> n;  // decimal, arbitrary size
  long pmax = 9;

  std::string route = "closed";
  std::optional<std::string> family;
  std::string formula = "eq5";
  bool symbolic = false;

  bool inverse = false;
  bool closed_form = false;

  std::string kind = "k";
  bool count_only = false;
  std::optional<long> total;
  std::optional<long> parts;
  long min_part = 1;

  std::vector<std::string> suites;
};

/// Parses argv (argv[0] is the program name) and runs the command, writing
/// results to `out` (or the --output file) and diagnostics to `err`.
/// Returns the process exit status.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Runs an already-parsed configuration.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace figurate::cli
