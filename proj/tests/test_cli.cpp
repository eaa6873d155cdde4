#include "cli_runner.hpp"

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

namespace {

std::vector<std::string> split(const std::string& line, char sep)
{
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, sep)) out.push_back(field);
  return out;
}

/// Data lines of a CSV report: header comments dropped, column row first.
std::vector<std::vector<std::string>> csv_rows(const std::string& text)
{
  std::vector<std::vector<std::string>> rows;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line))
    if (!line.empty() && line[0] != '#') rows.push_back(split(line, ','));
  return rows;
}

}  // namespace

TEST(Cli, SpectraFourSiteLattice)
{
  const auto r = run_cli("spectra --epsilon -1 --ell 1 --mass 1 --k 4 --format csv");
  ASSERT_EQ(r.exit_code, 0);
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"case", "epsilon", "ell", "mass", "delta", "n", "E_analytic", "E_numeric", "abs_diff"}));
  const double expected[] = {0.25, 0.5, 0.25};
  for (std::size_t j = 1; j < rows.size(); ++j) {
    EXPECT_EQ(rows[j][5], std::to_string(j));
    EXPECT_NEAR(std::stod(rows[j][6]), expected[j - 1], 1e-15);
    EXPECT_LE(std::stod(rows[j][8]), 1e-12);
  }
}

TEST(Cli, CountingUndeformedCellsArePi)
{
  const auto r = run_cli("counting --ell 0 --delta 3.14159 --levels 5");
  ASSERT_EQ(r.exit_code, 0);
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 6u);
  ASSERT_EQ(rows[0][9], "cell_closed_form");
  for (std::size_t j = 1; j < rows.size(); ++j) {
    EXPECT_EQ(std::stod(rows[j][9]), std::numbers::pi);
    EXPECT_NEAR(std::stod(rows[j][8]), std::numbers::pi, 1e-13);
  }
}

TEST(Cli, UncertaintyColumns)
{
  const auto r = run_cli("uncertainty --alpha-start 0.5 --alpha-stop 2 --steps 4 --ell 1");
  ASSERT_EQ(r.exit_code, 0);
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 5u);
  const std::vector<std::string> leading{"alpha", "ell", "dx", "dp", "product", "bound", "bound_kind", "satisfied"};
  for (std::size_t j = 0; j < leading.size(); ++j) EXPECT_EQ(rows[0][j], leading[j]);
  for (std::size_t j = 1; j < rows.size(); ++j) {
    EXPECT_EQ(rows[j][6], "deformed_eq16");
    EXPECT_EQ(rows[j][7], "true");
  }
}

TEST(Cli, OtherSubcommandsSucceed)
{
  for (const char* args : {"momstats --r 1 --s-max 30 --steps 31", "gup --c 2 --dp-min 0.01 --dp-max 100 --steps 50",
                           "dos --ell 0.1 --r 1", "measures --ell 1 --beta 1 --tau 1",
                           "spectra --epsilon 1 --ell 0.01 --delta 0.1 --levels 3",
                           "spectra --epsilon -1 --ell 1 --k 8 --boundary hard_zero",
                           "counting --epsilon -1 --ell 1 --k 10 --levels 9"}) {
    const auto r = run_cli(args);
    EXPECT_EQ(r.exit_code, 0) << args;
    EXPECT_GE(csv_rows(r.out).size(), 2u) << args;
  }
}

TEST(Cli, JsonMirrorsCsvFields)
{
  const auto csv = run_cli("dos --ell 0.1");
  const auto json = run_cli("--format json dos --ell 0.1");
  ASSERT_EQ(csv.exit_code, 0);
  ASSERT_EQ(json.exit_code, 0);
  const auto doc = nlohmann::json::parse(json.out);
  const auto rows = csv_rows(csv.out);
  ASSERT_EQ(doc["rows"].size() + 1, rows.size());
  for (std::size_t j = 0; j < rows[0].size(); ++j) EXPECT_TRUE(doc["rows"][0].contains(rows[0][j])) << rows[0][j];
  EXPECT_NEAR(doc["rows"][0]["product"].get<double>(), 3.14028272825127187, 1e-14);
  EXPECT_EQ(doc["meta"]["subcommand"], "dos");
}

TEST(Cli, ReportsAreDeterministic)
{
  for (const char* args : {"spectra --epsilon -1 --ell 0.5 --k 12", "--format json uncertainty --steps 7", "verify"}) {
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    EXPECT_EQ(a.exit_code, b.exit_code);
    EXPECT_EQ(a.out, b.out) << args;
  }
}

TEST(Cli, OutWritesFile)
{
  const auto path = std::filesystem::temp_directory_path() / "deformlab_cli_test.csv";
  const auto r = run_cli("--out " + path.string() + " dos --ell 0.2");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(), run_cli("dos --ell 0.2").out);
  std::filesystem::remove(path);
}

TEST(Cli, ExitCodes)
{
  EXPECT_EQ(run_cli("verify").exit_code, 0);
  EXPECT_EQ(run_cli("").exit_code, 1);
  EXPECT_EQ(run_cli("no-such-command").exit_code, 1);
  EXPECT_EQ(run_cli("spectra --epsilon 3").exit_code, 1);
  EXPECT_EQ(run_cli("spectra --epsilon -1 --ell 0.3 --delta 1.0 --k 3").exit_code, 1);
  EXPECT_EQ(run_cli("counting --epsilon -1 --ell 1 --k 4 --levels 4").exit_code, 1);
  EXPECT_EQ(run_cli("dos --ell 3").exit_code, 1);
  EXPECT_EQ(run_cli("--format xml dos").exit_code, 1);
  EXPECT_EQ(run_cli("--out /nonexistent-dir/report.csv dos").exit_code, 1);
}
