#include "cli/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cli/verify.hpp"
#include "figurate/figurate.hpp"

namespace figurate::cli {

using figurate::to_string;

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

OutputFormat parse_format(const std::string& name) {
  if (name == "plain") return OutputFormat::plain;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw UsageError("unknown format '" + name + "'");
}

/// FIGURATE_SIZE_GUARD, if set, must be a positive decimal integer.
std::optional<long> size_guard_from_env() {
  const char* raw = std::getenv("FIGURATE_SIZE_GUARD");
  if (raw == nullptr) return std::nullopt;
  const std::string_view text(raw);
  long value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || value < 1) {
    throw UsageError("FIGURATE_SIZE_GUARD must be a positive integer (got '" + std::string(text) + "')");
  }
  return value;
}

long require(const std::optional<long>& value, const char* flag) {
  if (!value) throw UsageError(std::string("missing required option ") + flag);
  return *value;
}

void require_guard(long p, long guard, const std::string& what) {
  if (p > guard) {
    throw UsageError(what + " enumerates tuple families; p=" + std::to_string(p) +
                     " exceeds the size guard " + std::to_string(guard) +
                     " (raise it with --size-guard or FIGURATE_SIZE_GUARD)");
  }
}

/// Right-aligned text table; the first column holds the row labels.
void print_table(std::ostream& out, const std::string& corner, const std::vector<std::string>& col_labels,
                 const std::vector<std::string>& row_labels,
                 const std::vector<std::vector<std::string>>& cells) {
  std::size_t label_width = corner.size();
  for (const auto& l : row_labels) label_width = std::max(label_width, l.size());
  std::vector<std::size_t> widths(col_labels.size());
  for (std::size_t c = 0; c < col_labels.size(); ++c) {
    widths[c] = col_labels[c].size();
    for (const auto& row : cells) {
      if (c < row.size()) widths[c] = std::max(widths[c], row[c].size());
    }
  }
  auto line = [&](const std::string& label, const std::vector<std::string>& values) {
    std::string s = std::string(label_width - label.size(), ' ') + label + " |";
    for (std::size_t c = 0; c < values.size(); ++c) {
      s += "  " + std::string(widths[c] - values[c].size(), ' ') + values[c];
    }
    out << s << '\n';
  };
  line(corner, col_labels);
  std::size_t rule = label_width + 1;
  for (auto w : widths) rule += w + 2;
  out << std::string(label_width + 1, '-') << '+' << std::string(rule - label_width - 1, '-') << '\n';
  for (std::size_t r = 0; r < cells.size(); ++r) line(row_labels[r], cells[r]);
}

void print_rows(std::ostream& out, OutputFormat format, const std::string& corner, long first_row,
                long first_col, const std::vector<std::vector<std::string>>& rows) {
  switch (format) {
    case OutputFormat::plain: {
      std::size_t cols = 0;
      for (const auto& r : rows) cols = std::max(cols, r.size());
      std::vector<std::string> col_labels, row_labels;
      for (std::size_t c = 0; c < cols; ++c) col_labels.push_back(std::to_string(first_col + static_cast<long>(c)));
      for (std::size_t r = 0; r < rows.size(); ++r) row_labels.push_back(std::to_string(first_row + static_cast<long>(r)));
      print_table(out, corner, col_labels, row_labels, rows);
      break;
    }
    case OutputFormat::csv:
      for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << r[i];
        out << '\n';
      }
      break;
    case OutputFormat::json:
      out << Json(rows).dump() << '\n';
      break;
  }
}

// ---------------------------------------------------------------------------

int cmd_coeff(const RunConfig& cfg, std::ostream& out) {
  const long p = require(cfg.p, "--p");
  const long ell = require(cfg.ell, "--ell");
  const Route route = parse_route(cfg.route);
  if (is_enumeration_route(route)) require_guard(p, cfg.size_guard, "route " + cfg.route);
  const Integer value = coefficient(route, p, ell);
  switch (cfg.format) {
    case OutputFormat::plain:
      out << to_string(value) << '\n';
      break;
    case OutputFormat::csv:
      out << "p,ell,route,value\n" << p << ',' << ell << ',' << cfg.route << ',' << to_string(value) << '\n';
      break;
    case OutputFormat::json:
      out << Json{{"p", std::to_string(p)}, {"ell", std::to_string(ell)}, {"route", cfg.route},
                  {"value", to_string(value)}}
                 .dump()
          << '\n';
      break;
  }
  return kExitOk;
}

int cmd_triangle(const RunConfig& cfg, std::ostream& out) {
  std::vector<std::vector<std::string>> rows;
  if (cfg.family) {
    const auto tri = number_triangle(parse_triangle_family(*cfg.family), cfg.pmax);
    for (const auto& r : tri.rows) {
      std::vector<std::string> row;
      for (const auto& v : r) row.push_back(to_string(v));
      rows.push_back(std::move(row));
    }
    const long first_col = tri.family == TriangleFamily::eulerian1 ? 1 : 0;
    print_rows(out, cfg.format, "k\\j", tri.first_row, first_col, rows);
    return kExitOk;
  }
  const Route route = parse_route(cfg.route);
  if (is_enumeration_route(route)) require_guard(cfg.pmax, cfg.size_guard, "route " + cfg.route);
  const auto tri = build_triangle(cfg.pmax, route);
  for (const auto& r : tri.rows) {
    std::vector<std::string> row;
    for (const auto& v : r) row.push_back(to_string(v));
    rows.push_back(std::move(row));
  }
  print_rows(out, cfg.format, "p\\l", 1, 0, rows);
  return kExitOk;
}

int cmd_certify(const RunConfig& cfg, std::ostream& out) {
  const long p = require(cfg.p, "--p");
  const long ell = require(cfg.ell, "--ell");
  const RouteReport report = certify(p, ell, cfg.size_guard);
  switch (cfg.format) {
    case OutputFormat::plain: {
      out << "certify p=" << p << " ell=" << ell << " (size guard " << cfg.size_guard << ")\n";
      for (const auto& r : report.routes) {
        out << "  " << std::left << std::setw(12) << to_string(r.route) << std::right
            << (r.value ? to_string(*r.value) : std::string("skipped")) << '\n';
      }
      out << "agree: " << (report.agree ? "yes" : "NO") << '\n';
      break;
    }
    case OutputFormat::csv:
      out << "route,value\n";
      for (const auto& r : report.routes) {
        out << to_string(r.route) << ',' << (r.value ? to_string(*r.value) : "skipped") << '\n';
      }
      out << "agree," << (report.agree ? "yes" : "no") << '\n';
      break;
    case OutputFormat::json: {
      Json routes = Json::object();
      for (const auto& r : report.routes) {
        routes[std::string(to_string(r.route))] = r.value ? to_string(*r.value) : "skipped";
      }
      out << Json{{"p", std::to_string(p)},
                  {"ell", std::to_string(ell)},
                  {"size_guard", std::to_string(cfg.size_guard)},
                  {"routes", routes},
                  {"agree", report.agree}}
                 .dump(2)
          << '\n';
      break;
    }
  }
  return report.agree ? kExitOk : kExitCheckFailed;
}

// Plain and csv write one tuple per line; json streams a single array of
// string arrays without materializing it.
template <class Generator, class Emit>
int stream_tuples(Generator&& gen, const RunConfig& cfg, std::ostream& out, Emit&& entries_of) {
  const bool json = cfg.format == OutputFormat::json;
  unsigned long count = 0;
  if (json && !cfg.count_only) out << '[';
  for (const auto& t : gen) {
    if (cfg.count_only) {
      ++count;
      continue;
    }
    const auto& e = entries_of(t);
    if (json) {
      out << (count++ ? "," : "") << '[';
      for (std::size_t i = 0; i < e.size(); ++i) out << (i ? ",\"" : "\"") << e[i] << '"';
      out << ']';
    } else {
      ++count;
      for (std::size_t i = 0; i < e.size(); ++i) out << (i ? "," : "") << e[i];
      out << '\n';
    }
  }
  if (cfg.count_only) {
    if (json) {
      out << '"' << count << "\"\n";
    } else {
      out << count << '\n';
    }
  } else if (json) {
    out << "]\n";
  }
  return kExitOk;
}

int cmd_tuples(const RunConfig& cfg, std::ostream& out) {
  if (cfg.kind == "composition") {
    const long total = require(cfg.total, "--total");
    const long parts = require(cfg.parts, "--parts");
    return stream_tuples(enumerate_compositions(total, parts, cfg.min_part), cfg, out,
                         [](const Composition& c) -> const std::vector<int>& { return c.parts; });
  }
  const long p = require(cfg.p, "--p");
  const long ell = require(cfg.ell, "--ell");
  if (cfg.kind == "k") {
    return stream_tuples(enumerate_k_tuples(p, ell), cfg, out,
                         [](const KTuple& t) -> const std::vector<int>& { return t.entries(); });
  }
  if (cfg.kind == "j") {
    return stream_tuples(enumerate_j_tuples(p, ell), cfg, out,
                         [](const JTuple& t) -> const std::vector<int>& { return t.entries(); });
  }
  throw UsageError("unknown tuple kind '" + cfg.kind + "' (expected k, j or composition)");
}

int cmd_fermat(const RunConfig& cfg, std::ostream& out) {
  const long p = require(cfg.p, "--p");
  RationalMatrix m = build_fermat(p);
  if (cfg.closed_form) {
    m = inverse_closed(p);
  } else if (cfg.inverse) {
    m = invert_exact(m);
  }
  std::vector<std::vector<std::string>> rows;
  for (std::size_t k = 1; k <= m.order(); ++k) {
    std::vector<std::string> row;
    for (const auto& v : m.row(k)) {
      row.push_back(cfg.format == OutputFormat::plain ? to_display_string(v) : to_string(v));
    }
    rows.push_back(std::move(row));
  }
  print_rows(out, cfg.format, "k\\j", 1, 1, rows);
  return kExitOk;
}

int cmd_powersum(const RunConfig& cfg, std::ostream& out) {
  const long p = require(cfg.p, "--p");
  const Formula formula = parse_formula(cfg.formula);
  if (formula == Formula::power_ml1) require_guard(p, cfg.size_guard, "formula ml1-power");
  if (cfg.symbolic) {
    const Polynomial poly = expand_symbolic(p, formula);
    switch (cfg.format) {
      case OutputFormat::plain:
        out << to_display_string(poly) << '\n';
        break;
      case OutputFormat::csv:
        for (std::size_t i = 0; i < poly.coefficients().size(); ++i) {
          out << (i ? "," : "") << to_string(poly.coefficients()[i]);
        }
        out << '\n';
        break;
      case OutputFormat::json:
        out << to_json(poly) << '\n';
        break;
    }
    return kExitOk;
  }
  if (!cfg.n) throw UsageError("missing required option --n (or pass --symbolic)");
  const Integer n = parse_integer(*cfg.n);
  const Integer value = power_sum(formula, n, p);
  if (cfg.format == OutputFormat::json) {
    out << Json{{"p", std::to_string(p)}, {"n", to_string(n)}, {"formula", cfg.formula},
                {"value", to_string(value)}}
               .dump()
        << '\n';
  } else {
    out << to_string(value) << '\n';
  }
  return kExitOk;
}

int cmd_faulhaber(const RunConfig& cfg, std::ostream& out) {
  const long p = require(cfg.p, "--p");
  const auto coeffs = faulhaber_coefficients(p);
  switch (cfg.format) {
    case OutputFormat::plain:
      for (const auto& c : coeffs) out << to_string(c) << '\n';
      break;
    case OutputFormat::csv:
      for (std::size_t i = 0; i < coeffs.size(); ++i) out << (i ? "," : "") << to_string(coeffs[i]);
      out << '\n';
      break;
    case OutputFormat::json: {
      Json arr = Json::array();
      for (const auto& c : coeffs) arr.push_back(to_string(c));
      out << arr.dump() << '\n';
      break;
    }
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const VerifyReport report = verify(cfg.suites, cfg.pmax, cfg.size_guard);
  if (cfg.format == OutputFormat::json) {
    Json checks = Json::array();
    for (const auto& c : report.checks) {
      checks.push_back(Json{{"suite", c.suite},
                            {"p", std::to_string(c.p)},
                            {"ell", std::to_string(c.ell)},
                            {"name", c.name},
                            {"status", std::string(to_string(c.status))},
                            {"detail", c.detail}});
    }
    out << Json{{"version", report.version},
                {"suites", report.suites},
                {"pmax", std::to_string(report.pmax)},
                {"size_guard", std::to_string(report.size_guard)},
                {"checks", checks},
                {"passed", std::to_string(report.count(CheckStatus::pass))},
                {"failed", std::to_string(report.count(CheckStatus::fail))},
                {"skipped", std::to_string(report.count(CheckStatus::skipped))}}
               .dump(2)
        << '\n';
  } else {
    out << "figurate " << report.version << " verify pmax=" << report.pmax
        << " size-guard=" << report.size_guard << " suites:";
    for (const auto& s : report.suites) out << ' ' << s;
    out << '\n';
    for (const auto& c : report.checks) {
      out << '[' << c.suite << "] ";
      if (c.p > 0) out << "p=" << c.p << ' ';
      if (c.ell >= 0) out << "l=" << c.ell << ' ';
      out << c.name << ": " << to_string(c.status);
      if (!c.detail.empty()) out << " (" << c.detail << ')';
      out << '\n';
    }
    out << "summary: " << report.count(CheckStatus::pass) << " passed, "
        << report.count(CheckStatus::fail) << " failed, " << report.count(CheckStatus::skipped)
        << " skipped\n";
  }
  // Timing goes to stderr so stdout stays byte-identical across runs.
  err << "verify finished in " << std::fixed << std::setprecision(3) << report.seconds << " s\n";
  return report.ok() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* sink = &out;
  try {
    if (!config.output.empty()) {
      file.open(config.output);
      if (!file) throw UsageError("cannot open output file '" + config.output + "'");
      sink = &file;
    }
    if (config.size_guard < 1) throw UsageError("size guard must be a positive integer");
    const std::string& c = config.command;
    if (c == "coeff") return cmd_coeff(config, *sink);
    if (c == "triangle") return cmd_triangle(config, *sink);
    if (c == "certify") return cmd_certify(config, *sink);
    if (c == "tuples") return cmd_tuples(config, *sink);
    if (c == "fermat") return cmd_fermat(config, *sink);
    if (c == "powersum") return cmd_powersum(config, *sink);
    if (c == "faulhaber") return cmd_faulhaber(config, *sink);
    if (c == "verify") return cmd_verify(config, *sink, err);
    throw UsageError("unknown command '" + c + "'");
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string format = "plain";

  CLI::App app{"Exact figurate-number coefficients, Fermat matrices and power sums", "figurate"};
  app.set_version_flag("--version", std::string("figurate ") + FIGURATE_VERSION);
  app.require_subcommand(1);
  // Global options are also accepted after the subcommand name.
  app.fallthrough();
  try {
    if (auto env = size_guard_from_env()) cfg.size_guard = *env;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  app.add_option("--size-guard", cfg.size_guard,
                 "Largest p for which tuple-enumeration routes run (default 14, or "
                 "FIGURATE_SIZE_GUARD)")
      ->check(CLI::PositiveNumber);
  app.add_option("--output", cfg.output, "Write results to this file instead of stdout");

  app.add_option("--format", format, "plain, csv or json")
      ->check(CLI::IsMember({"plain", "csv", "json"}));

  auto* coeff = app.add_subcommand("coeff", "One coefficient c(p, l) by a chosen route");
  coeff->add_option("--p", cfg.p)->required();
  coeff->add_option("--ell", cfg.ell)->required();
  coeff->add_option("--route", cfg.route,
                    "closed, enum_k, enum_j, recurrence, decompose, eulerian2, alternating");

  auto* triangle = app.add_subcommand("triangle", "Coefficient triangle, or a named number triangle");
  triangle->add_option("--pmax", cfg.pmax, "Last row")->check(CLI::NonNegativeNumber);
  triangle->add_option("--route", cfg.route);
  triangle->add_option("--family", cfg.family, "stirling1, stirling2, eulerian1 or eulerian2");

  auto* cert = app.add_subcommand("certify", "Evaluate c(p, l) by every route and compare");
  cert->add_option("--p", cfg.p)->required();
  cert->add_option("--ell", cfg.ell)->required();

  auto* tuples = app.add_subcommand("tuples", "Stream constrained tuples, one per line");
  tuples->add_option("--p", cfg.p);
  tuples->add_option("--ell", cfg.ell);
  tuples->add_option("--kind", cfg.kind, "k, j or composition");
  tuples->add_option("--total", cfg.total, "Composition total");
  tuples->add_option("--parts", cfg.parts, "Composition part count");
  tuples->add_option("--min-part", cfg.min_part, "Smallest allowed part");
  tuples->add_flag("--count-only", cfg.count_only, "Print only the number of tuples");

  auto* fermat = app.add_subcommand("fermat", "Fermat matrix A_p or its inverse");
  fermat->add_option("--p", cfg.p)->required();
  fermat->add_flag("--inverse", cfg.inverse, "Invert by forward substitution");
  fermat->add_flag("--closed", cfg.closed_form, "Closed-form inverse");

  auto* powersum = app.add_subcommand("powersum", "Power sum 1^p + ... + n^p by a chosen formula");
  powersum->add_option("--p", cfg.p)->required();
  powersum->add_option("--n", cfg.n);
  powersum->add_option("--formula", cfg.formula,
                       "brute, eq5, stir, euler, alt3, faulhaber or ml1-power");
  powersum->add_flag("--symbolic", cfg.symbolic, "Print the expanded polynomial in n");

  auto* faulhaber = app.add_subcommand("faulhaber", "Faulhaber coefficients for p >= 2");
  faulhaber->add_option("--p", cfg.p)->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run the identity checks");
  verify_cmd->add_option("--suite", cfg.suites,
                         "coeff, fermat, powersum, orthogonality, enumeration or all");
  verify_cmd->add_option("--pmax", cfg.pmax)->check(CLI::PositiveNumber);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help / --version
      app.exit(e, out, err);
      return kExitOk;
    }
    app.exit(e, err, err);
    return kExitUsage;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  cfg.format = parse_format(format);
  if (cfg.command == "verify" && cfg.suites.empty()) cfg.suites = {"all"};
  if (cfg.command == "triangle" && cfg.family && triangle->count("--route") > 0) {
    err << "usage error: --route and --family are mutually exclusive\n";
    return kExitUsage;
  }
  return run(cfg, out, err);
}

}  // namespace figurate::cli
