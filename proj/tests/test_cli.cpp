#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qbroadcast/scan_io.hpp"

#include "json.hpp"

#include <array>
#include <cstdio>
#include <sstream>
#include <string>

using namespace qbroadcast;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string command = std::string(QBROADCAST_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buffer;
  std::size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("scan CSV round-trips through parse and re-serialize") {
  for (Family family :
       {Family::WernerLike, Family::BellDiagonal, Family::PureSchmidt}) {
    const ScanReport report = scan(family, ClonerSpec::local_si(), 16);
    const std::string csv = to_csv(report);
    std::istringstream in(csv);
    const ScanReport parsed = from_csv(in);
    CHECK(parsed.family == report.family);
    CHECK(parsed.rows.size() == report.rows.size());
    CHECK(to_csv(parsed) == csv);
  }
}

TEST_CASE("scan CSV uses LF endings and a header row") {
  const ScanReport report = scan(Family::PureSchmidt, ClonerSpec::local_si(), 16);
  const std::string csv = to_csv(report);
  CHECK(csv.find('\r') == std::string::npos);
  CHECK(csv.rfind("s,cross_entangled", 0) == 0);
}

TEST_CASE("scan JSON has config, grid and summary keys") {
  const ScanReport report = scan(Family::WernerLike, ClonerSpec::nonlocal_si(), 16);
  const auto doc = nlohmann::json::parse(to_json(report, 7));
  REQUIRE(doc.contains("config"));
  REQUIRE(doc.contains("grid"));
  REQUIRE(doc.contains("summary"));
  CHECK(doc["config"]["family"] == "werner");
  CHECK(doc["config"]["locality"] == "nonlocal");
  CHECK(doc["config"]["seed"] == 7);
  CHECK(doc["grid"].size() == 16 * 16);
  CHECK(doc["summary"]["points"] == 16 * 16);
}

TEST_CASE("format_number keeps 12 significant digits") {
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(-0.75) == "-0.75");
}

TEST_CASE("CLI exit codes: 0 success, 1 verification failure, 2 usage error") {
  CHECK(run_cli("state --family pure --schmidt 0.5").exit_code == 0);
  CHECK(run_cli("verify --checks=theorems").exit_code == 0);
  CHECK(run_cli("verify --checks=oracle --inject-failure").exit_code == 1);
  CHECK(run_cli("clone --dependence sd").exit_code == 2);  // missing --lambda
  CHECK(run_cli("scan --resolution 4").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
  CHECK(run_cli("discord --family pure --schmidt 1.5").exit_code == 2);
}

TEST_CASE("CLI scan output is byte-identical across runs") {
  const std::string args =
      "scan --family werner --locality local --dependence si --resolution 16 "
      "--format csv";
  const RunResult first = run_cli(args);
  const RunResult second = run_cli(args);
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);
  CHECK(first.output.find("p,alpha_sq,cross_entangled") == 0);
}

TEST_CASE("CLI check agrees with the library on a broadcastable point") {
  const RunResult result = run_cli(
      "check --family werner --p 1 --alpha-sq 0.5 --locality local --dependence si");
  REQUIRE(result.exit_code == 0);
  const auto doc = nlohmann::json::parse(result.output);
  CHECK(doc["entanglement"]["optimal"] == true);
  CHECK(doc["qcsbe"]["optimal"] == false);
}

TEST_CASE("CLI clone flags the state-independent reduction") {
  const RunResult result = run_cli(
      "clone --family pure --schmidt 0.5 --locality local --dependence sd "
      "--lambda 0.16666666666666666");
  REQUIRE(result.exit_code == 0);
  const auto doc = nlohmann::json::parse(result.output);
  CHECK(doc["reduces_to_si"] == true);
  CHECK(doc["pairs"].contains("14"));
  CHECK(doc["pairs"].contains("23"));
}

TEST_CASE("CLI tables exits zero with every row reproduced") {
  const RunResult result = run_cli("tables");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("28/28 rows reproduced") != std::string::npos);
}
