// ============================================================================
// End-to-end tests for the zv command-line binary.  Each case shells out to
// the built executable (path injected as CLI_BINARY_PATH) and inspects exit
// status plus captured stdout.
// ============================================================================

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "zetaverify/phi.hpp"

namespace {

struct CliResult {
  int exit_code = -1;
  std::string stdout_text;
};

CliResult run_cli(const std::string& args) {
  static int counter = 0;
  std::ostringstream path;
  path << "/tmp/zv_cli_out_" << ::getpid() << '_' << counter++ << ".txt";
  const std::string cmd =
      std::string(CLI_BINARY_PATH) + " " + args + " > " + path.str() +
      " 2>/dev/null";
  const int raw = std::system(cmd.c_str());
  CliResult result;
  result.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::ifstream in(path.str());
  std::ostringstream captured;
  captured << in.rdbuf();
  result.stdout_text = captured.str();
  std::remove(path.str().c_str());
  return result;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) lines.push_back(line);
  return lines;
}

std::string format17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

TEST_CASE("verify emits parseable JSON and exits by pass state") {
  const CliResult ok =
      run_cli("verify critical-line --t-max 300 --tol 0.05 --json");
  REQUIRE(ok.exit_code == 0);
  const auto lines = split_lines(ok.stdout_text);
  REQUIRE(lines.size() == 1);
  const auto row = nlohmann::json::parse(lines[0]);
  CHECK(row.at("name").get<std::string>() == "critical-line");
  CHECK(row.at("pass").get<bool>());
  CHECK(row.at("rhs_re").get<double>() ==
        doctest::Approx(3.14159265358979323846 * std::log(2.0))
            .epsilon(1e-12));
  CHECK(row.at("rhs_im").get<double>() == 0.0);
  CHECK(row.at("tolerance").get<double>() == 0.05);
  CHECK(row.at("params").at("t_max").get<double>() == 300.0);
  CHECK(row.at("rel_error").get<double>() < 0.05);

  // Same truncation with a tolerance below the truncation error: the report
  // must fail and the process must exit 1 (not crash, not 2).
  const CliResult fail =
      run_cli("verify critical-line --t-max 300 --tol 1e-3 --json");
  CHECK(fail.exit_code == 1);
  const auto fail_lines = split_lines(fail.stdout_text);
  REQUIRE(fail_lines.size() == 1);
  const auto fail_row = nlohmann::json::parse(fail_lines[0]);
  CHECK_FALSE(fail_row.at("pass").get<bool>());
}

TEST_CASE("usage and configuration errors exit 2") {
  CHECK(run_cli("verify no-such-check").exit_code == 2);
  CHECK(run_cli("verify").exit_code == 2);
  CHECK(run_cli("phi").exit_code == 2);
  CHECK(run_cli("phi --x 0.5").exit_code == 2);          // below domain
  CHECK(run_cli("phi --grid 1:10:0:log").exit_code == 2);
  CHECK(run_cli("phi --grid 1:10:5:cubic").exit_code == 2);
  CHECK(run_cli("verify critical-line --tol -1").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);  // missing subcommand
}

TEST_CASE("phi point output matches library evaluation") {
  const CliResult res = run_cli("phi --x 2");
  REQUIRE(res.exit_code == 0);
  CHECK(res.stdout_text.find(format17(zv::phi_exact(2.0))) !=
        std::string::npos);
  CHECK(res.stdout_text.find(format17(zv::phi_asymptotic(2.0))) !=
        std::string::npos);
  CHECK(res.stdout_text.find(format17(zv::phi_remainder(2.0))) !=
        std::string::npos);

  const CliResult csv = run_cli("phi --x 2 --csv");
  REQUIRE(csv.exit_code == 0);
  const auto lines = split_lines(csv.stdout_text);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "x,phi_exact,phi_asymptotic,phi_remainder");
  CHECK(lines[1].rfind("2,", 0) == 0);
}

TEST_CASE("phi grid emits one CSV row per node, endpoints inclusive") {
  const CliResult res = run_cli("phi --grid 1:100:7:log");
  REQUIRE(res.exit_code == 0);
  const auto lines = split_lines(res.stdout_text);
  REQUIRE(lines.size() == 8);  // header + 7 rows
  CHECK(lines[0] == "x,phi_exact,phi_asymptotic,phi_remainder");
  CHECK(lines[1].rfind("1,", 0) == 0);
  CHECK(lines[7].rfind("100,", 0) == 0);

  const CliResult lin = run_cli("phi --grid 1:3:3:linear");
  REQUIRE(lin.exit_code == 0);
  const auto lin_lines = split_lines(lin.stdout_text);
  REQUIRE(lin_lines.size() == 4);
  CHECK(lin_lines[2].rfind("2,", 0) == 0);  // midpoint of [1,3]
}

TEST_CASE("--out writes the rows to a file") {
  const std::string path = "/tmp/zv_cli_outfile.csv";
  std::remove(path.c_str());
  const CliResult res = run_cli(
      "verify indicator-mellin --s 2 --csv --out " + path);
  REQUIRE(res.exit_code == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string header, row;
  REQUIRE(std::getline(in, header));
  REQUIRE(std::getline(in, row));
  CHECK(header.rfind("name,params,", 0) == 0);
  CHECK(row.rfind("indicator-mellin,", 0) == 0);
  std::remove(path.c_str());
}

TEST_CASE("multiple checks concatenate reports in order") {
  const CliResult res = run_cli("verify lorentzian indicator-mellin --json");
  REQUIRE(res.exit_code == 0);
  const auto lines = split_lines(res.stdout_text);
  REQUIRE(lines.size() == 5);  // 1 aggregate + 4 transform points
  CHECK(nlohmann::json::parse(lines[0]).at("name").get<std::string>() ==
        "lorentzian");
  for (size_t i = 1; i < lines.size(); ++i) {
    const auto row = nlohmann::json::parse(lines[i]);
    CHECK(row.at("name").get<std::string>() == "indicator-mellin");
    CHECK(row.at("pass").get<bool>());
  }
}

TEST_CASE("overrides flow through to the report parameters") {
  const CliResult res =
      run_cli("verify phi-mellin --s 0.5,1 --x-max 30000 --tol 1e-2 --json");
  REQUIRE(res.exit_code == 0);
  const auto lines = split_lines(res.stdout_text);
  REQUIRE(lines.size() == 1);
  const auto row = nlohmann::json::parse(lines[0]);
  CHECK(row.at("params").at("s_re").get<double>() == 0.5);
  CHECK(row.at("params").at("s_im").get<double>() == 1.0);
  CHECK(row.at("params").at("x_max").get<double>() == 30000.0);
  CHECK(row.at("tolerance").get<double>() == 1e-2);
}
