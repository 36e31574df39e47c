#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli/cli.hpp"
#include "cli/reference_data.hpp"
#include "cli/verify.hpp"
#include "figurate/coefficients.hpp"
#include "figurate/enumeration.hpp"
#include "figurate/fermat.hpp"
#include "figurate/powersum.hpp"

namespace figurate::cli {

using figurate::to_string;
namespace {

struct Result {
  int status = 0;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "figurate");
  std::ostringstream out, err;
  const int status = main_entry(args, out, err);
  return {status, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

class ScopedEnv {
 public:
  ScopedEnv(const char* name, const char* value) : name_(name) { ::setenv(name, value, 1); }
  ~ScopedEnv() { ::unsetenv(name_); }
  ScopedEnv(const ScopedEnv&) = delete;
  ScopedEnv& operator=(const ScopedEnv&) = delete;

 private:
  const char* name_;
};

TEST(Cli, TriangleCsvMatchesReferenceTable) {
  const Result r = run_cli({"triangle", "--pmax", "9", "--format", "csv"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 9u);
  for (std::size_t p = 0; p < rows.size(); ++p) {
    std::string expected;
    for (std::size_t ell = 0; ell < reference::kCoefficientTable[p].size(); ++ell) {
      if (ell > 0) expected += ",";
      expected += std::to_string(reference::kCoefficientTable[p][ell]);
    }
    EXPECT_EQ(rows[p], expected);
  }
}

TEST(Cli, TriangleRoutesAndFamilies) {
  EXPECT_EQ(run_cli({"triangle", "--pmax", "6", "--route", "enum_j", "--format", "csv"}).out,
            run_cli({"triangle", "--pmax", "6", "--route", "closed", "--format", "csv"}).out);
  const Result e1 = run_cli({"triangle", "--pmax", "8", "--family", "eulerian1", "--format", "csv"});
  ASSERT_EQ(e1.status, kExitOk);
  EXPECT_EQ(lines(e1.out).back(), "1,247,4293,15619,15619,4293,247,1");
  EXPECT_EQ(run_cli({"triangle", "--pmax", "3", "--route", "nope"}).status, kExitUsage);
  EXPECT_EQ(run_cli({"triangle", "--pmax", "3", "--family", "nope"}).status, kExitUsage);
}

TEST(Cli, CertifyAgreesAndReportsEveryRoute) {
  const Result r = run_cli({"certify", "--p", "5", "--ell", "2", "--format", "json"});
  ASSERT_EQ(r.status, kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_TRUE(doc.at("agree").get<bool>());
  ASSERT_EQ(doc.at("routes").size(), std::size(kAllRoutes));
  for (const auto& [name, value] : doc.at("routes").items()) EXPECT_EQ(value, "150") << name;
}

TEST(Cli, CertifyMarksGuardedRoutesSkipped) {
  const Result r = run_cli({"certify", "--p", "10", "--ell", "3", "--size-guard", "8", "--format", "json"});
  ASSERT_EQ(r.status, kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc.at("routes").at("enum_k"), "skipped");
  EXPECT_EQ(doc.at("routes").at("closed"), to_string(c_closed(10, 3)));
}

TEST(Cli, CoefficientRoutes) {
  for (Route route : kAllRoutes) {
    const Result r = run_cli({"coeff", "--p", "9", "--ell", "5", "--route", std::string(to_string(route))});
    EXPECT_EQ(r.status, kExitOk);
    EXPECT_EQ(r.out, "186480\n") << to_string(route);
  }
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).status, kExitUsage);
  EXPECT_EQ(run_cli({"bogus"}).status, kExitUsage);
  EXPECT_EQ(run_cli({"coeff", "--p", "5"}).status, kExitUsage);
  EXPECT_EQ(run_cli({"coeff", "--p", "5", "--ell", "5"}).status, kExitUsage);
  EXPECT_EQ(run_cli({"coeff", "--p", "x", "--ell", "1"}).status, kExitUsage);
  EXPECT_EQ(run_cli({"coeff", "--p", "20", "--ell", "3", "--route", "enum_k"}).status, kExitUsage);
  EXPECT_EQ(run_cli({"powersum", "--p", "3", "--n", "-4"}).status, kExitUsage);
  EXPECT_EQ(run_cli({"faulhaber", "--p", "1"}).status, kExitUsage);
  EXPECT_EQ(run_cli({"verify", "--suite", "nope"}).status, kExitUsage);
  EXPECT_EQ(run_cli({"triangle", "--pmax", "3", "--format", "xml"}).status, kExitUsage);
  EXPECT_EQ(run_cli({"--help"}).status, kExitOk);
}

TEST(Cli, SizeGuardFromEnvironment) {
  {
    ScopedEnv env("FIGURATE_SIZE_GUARD", "20");
    EXPECT_EQ(run_cli({"coeff", "--p", "16", "--ell", "15", "--route", "enum_k"}).status, kExitOk);
  }
  {
    ScopedEnv env("FIGURATE_SIZE_GUARD", "5");
    EXPECT_EQ(run_cli({"coeff", "--p", "6", "--ell", "1", "--route", "enum_j"}).status, kExitUsage);
    // The flag wins over the environment.
    EXPECT_EQ(run_cli({"coeff", "--p", "6", "--ell", "1", "--route", "enum_j", "--size-guard", "6"}).status,
              kExitOk);
  }
  {
    ScopedEnv env("FIGURATE_SIZE_GUARD", "zero");
    EXPECT_EQ(run_cli({"coeff", "--p", "6", "--ell", "1"}).status, kExitUsage);
  }
}

TEST(Cli, TuplesStreamAndCount) {
  const Result r = run_cli({"tuples", "--p", "5", "--ell", "2"});
  ASSERT_EQ(r.status, kExitOk);
  EXPECT_EQ(lines(r.out).size(), 6u);
  EXPECT_EQ(run_cli({"tuples", "--p", "9", "--ell", "5", "--kind", "j", "--count-only"}).out, "56\n");
  EXPECT_EQ(run_cli({"tuples", "--kind", "composition", "--total", "7", "--parts", "2", "--min-part", "2"}).out,
            "2,5\n3,4\n4,3\n5,2\n");
}

TEST(Cli, TuplesJsonRoundTrip) {
  const Result r = run_cli({"tuples", "--p", "7", "--ell", "3", "--kind", "j", "--format", "json"});
  ASSERT_EQ(r.status, kExitOk);
  std::vector<std::vector<int>> parsed;
  for (const auto& tuple : nlohmann::json::parse(r.out)) {
    std::vector<int> entries;
    for (const auto& e : tuple) entries.push_back(std::stoi(e.get<std::string>()));
    parsed.push_back(entries);
  }
  std::vector<std::vector<int>> expected;
  for (const JTuple& t : enumerate_j_tuples(7, 3)) expected.push_back(t.entries());
  EXPECT_EQ(parsed, expected);
  EXPECT_EQ(nlohmann::json::parse(run_cli({"tuples", "--kind", "composition", "--total", "3", "--parts", "2",
                                           "--min-part", "2", "--format", "json"})
                                      .out),
            nlohmann::json::array());
  EXPECT_EQ(run_cli({"tuples", "--p", "9", "--ell", "5", "--kind", "j", "--count-only", "--format", "json"}).out,
            "\"56\"\n");
}

TEST(Cli, GlobalOptionsOnEitherSide) {
  const Result before = run_cli({"--format", "csv", "--size-guard", "9", "certify", "--p", "6", "--ell", "2"});
  const Result after = run_cli({"certify", "--p", "6", "--ell", "2", "--format", "csv", "--size-guard", "9"});
  EXPECT_EQ(before.status, kExitOk);
  EXPECT_EQ(before.out, after.out);
}

TEST(Cli, FermatMatricesRoundTripThroughJson) {
  const Result r = run_cli({"fermat", "--p", "6", "--format", "json"});
  ASSERT_EQ(r.status, kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  const RationalMatrix a = build_fermat(6);
  ASSERT_EQ(doc.size(), 6u);
  for (std::size_t k = 1; k <= 6; ++k) {
    for (std::size_t j = 1; j <= 6; ++j) {
      EXPECT_EQ(parse_rational(doc[k - 1][j - 1].get<std::string>()), a(k, j));
    }
  }
  const Result inv = run_cli({"fermat", "--p", "5", "--inverse", "--format", "csv"});
  EXPECT_EQ(lines(inv.out).back(), "1/1,-30/1,150/1,-240/1,120/1");
  EXPECT_EQ(run_cli({"fermat", "--p", "5", "--inverse", "--closed", "--format", "csv"}).out, inv.out);
}

TEST(Cli, PowerSumValuesAndSymbolicForms) {
  for (const char* formula : {"brute", "eq5", "stir", "euler", "alt3", "faulhaber"}) {
    const Result r = run_cli({"powersum", "--p", "8", "--n", "10", "--formula", formula});
    EXPECT_EQ(r.status, kExitOk) << formula;
    EXPECT_EQ(r.out, "167731333\n") << formula;
  }
  EXPECT_EQ(run_cli({"powersum", "--p", "5", "--n", "2", "--formula", "ml1-power"}).out, "32\n");
  const Result sym = run_cli({"powersum", "--p", "3", "--symbolic", "--formula", "faulhaber", "--format", "json"});
  ASSERT_EQ(sym.status, kExitOk);
  EXPECT_EQ(polynomial_from_json(sym.out), expand_symbolic(3, Formula::brute));
  const Result big = run_cli({"powersum", "--p", "3", "--n", "100000000000000000000"});
  EXPECT_EQ(big.status, kExitOk);
  EXPECT_EQ(parse_integer(lines(big.out).front()), faulhaber_eval(Integer("100000000000000000000"), 3));
}

TEST(Cli, FaulhaberJsonRoundTrip) {
  const Result r = run_cli({"faulhaber", "--p", "6", "--format", "json"});
  ASSERT_EQ(r.status, kExitOk);
  std::vector<Rational> parsed;
  for (const auto& item : nlohmann::json::parse(r.out)) parsed.push_back(parse_rational(item.get<std::string>()));
  EXPECT_EQ(parsed, faulhaber_coefficients(6));
}

TEST(Cli, TriangleJsonRoundTripForLargeValues) {
  const Result r = run_cli({"triangle", "--pmax", "25", "--format", "json"});
  ASSERT_EQ(r.status, kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  const CoeffTriangle tri = build_triangle(25, Route::closed);
  for (long p = 1; p <= 25; ++p) {
    for (long ell = 0; ell < p; ++ell) {
      EXPECT_EQ(parse_integer(doc[static_cast<std::size_t>(p - 1)][static_cast<std::size_t>(ell)].get<std::string>()),
                tri.at(p, ell));
    }
  }
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::vector<std::string>> configs = {
      {"triangle", "--pmax", "12", "--format", "json"},
      {"certify", "--p", "11", "--ell", "4"},
      {"tuples", "--p", "10", "--ell", "4", "--kind", "j"},
      {"verify", "--suite", "all", "--pmax", "7", "--format", "json"},
      {"verify", "--suite", "coeff", "--pmax", "6"},
  };
  for (const auto& config : configs) {
    const Result first = run_cli(config);
    const Result second = run_cli(config);
    EXPECT_EQ(first.status, second.status);
    EXPECT_EQ(first.out, second.out) << config.front();
  }
}

TEST(Cli, OutputFileOption) {
  const auto path = std::filesystem::temp_directory_path() / "figurate_cli_output_test.csv";
  const Result r = run_cli({"triangle", "--pmax", "3", "--format", "csv", "--output", path.string()});
  ASSERT_EQ(r.status, kExitOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream contents;
  contents << in.rdbuf();
  EXPECT_EQ(contents.str(), "1\n2,1\n6,6,1\n");
  std::filesystem::remove(path);
}

TEST(Verify, FullSuitePassesAndIsSorted) {
  const VerifyReport report = verify({"all"}, 10, kDefaultSizeGuard);
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.count(CheckStatus::fail), 0u);
  EXPECT_GT(report.count(CheckStatus::pass), 100u);
  EXPECT_EQ(report.suites, suite_names());
  for (std::size_t i = 1; i < report.checks.size(); ++i) {
    const auto& a = report.checks[i - 1];
    const auto& b = report.checks[i];
    EXPECT_LE(std::tie(a.suite, a.p, a.ell), std::tie(b.suite, b.p, b.ell));
  }
}

TEST(Verify, NamedChecksArePresent) {
  const auto has = [](const VerifyReport& report, const std::string& fragment) {
    for (const auto& c : report.checks) {
      if (c.name.find(fragment) != std::string::npos && c.status == CheckStatus::pass) return true;
    }
    return false;
  };
  EXPECT_TRUE(has(verify({"coeff"}, 9, 14), "reference coefficient table"));
  EXPECT_TRUE(has(verify({"fermat"}, 5, 14), "A_5 and its inverse match the reference"));
  EXPECT_TRUE(has(verify({"powersum"}, 8, 14), "p=8 power sum carry the reference"));
}

TEST(Verify, GuardSkipsAreNotFailures) {
  const VerifyReport report = verify({"coeff"}, 8, 5);
  EXPECT_TRUE(report.ok());
  EXPECT_GT(report.count(CheckStatus::skipped), 0u);
  const Result r = run_cli({"verify", "--suite", "coeff", "--pmax", "8", "--size-guard", "5"});
  EXPECT_EQ(r.status, kExitOk);
}

TEST(Verify, RejectsBadArguments) {
  EXPECT_THROW(verify({"nope"}, 5, 14), std::invalid_argument);
  EXPECT_THROW(verify({"coeff"}, 0, 14), std::invalid_argument);
}

}  // namespace
}  // namespace figurate::cli
