#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "taumap/cli.hpp"
#include "taumap/golden.hpp"
#include "taumap/serialize.hpp"

namespace {

struct RunResult {
  int status;
  std::string out;
  std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = taumap::run(args, out, err);
  return {status, out.str(), err.str()};
}

int line_count(const std::string& s) {
  return static_cast<int>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST_CASE("cli: table text reproduces the stored layout") {
  const auto result = run_cli({"table", "3D4", "--format", "text"});
  CHECK(result.status == 0);
  CHECK(line_count(result.out) == 5);
  CHECK(result.out ==
        taumap::stored_transcription(taumap::TwistedType::triple_d4()));
  CHECK(result.out.ends_with("1_0,(D4,1,0) ..... [1]\n"));

  const auto e6 = run_cli({"table", "2E6"});
  CHECK(e6.status == 0);
  CHECK(line_count(e6.out) == 17);
}

TEST_CASE("cli: tau lookups") {
  const auto result = run_cli({"tau", "2E6", "--entry", "(A5,eps,0)"});
  CHECK(result.status == 0);
  CHECK(result.out == "8'_3\n");

  const auto unit = run_cli({"tau", "3D4", "--entry", "(D4,1,0)"});
  CHECK(unit.out == "1_0\n");

  const auto bad = run_cli({"tau", "2E6", "--entry", "(D4,1,0)"});
  CHECK(bad.status == 1);
  CHECK(bad.err.find("error") != std::string::npos);
}

TEST_CASE("cli: enumerate csv has one data row per label") {
  const auto result = run_cli({"enumerate", "2A:5", "--format", "csv"});
  CHECK(result.status == 0);
  CHECK(line_count(result.out) == 12);  // header + 11 labels
  CHECK(result.out.rfind("group,levi,char,d,index,label\n", 0) == 0);
}

TEST_CASE("cli: fiber and strata") {
  const auto fiber = run_cli({"fiber", "2E6", "--stratum", "12_4"});
  CHECK(fiber.status == 0);
  CHECK(line_count(fiber.out) == 5);
  CHECK(fiber.out.find("(E6,1,4)") != std::string::npos);

  const auto strata = run_cli({"strata", "3D4"});
  CHECK(strata.status == 0);
  CHECK(strata.out == "1_6\n1''_3\n2_2\n2_1\n1_0\n");

  const auto unsupported = run_cli({"strata", "2A:4"});
  CHECK(unsupported.status == 1);
}

TEST_CASE("cli: centralizer") {
  const auto c = run_cli({"centralizer", "2A:5", "--k", "4"});
  CHECK(c.status == 0);
  CHECK(c.out == "C3xD2\n");

  const auto full = run_cli({"centralizer", "3D4", "--d", "1", "--r", "3"});
  CHECK(full.out == "FULL\n");

  const auto missing = run_cli({"centralizer", "2A:5"});
  CHECK(missing.status == 2);

  const auto invalid = run_cli({"centralizer", "2A:5", "--k", "1"});
  CHECK(invalid.status == 1);
}

TEST_CASE("cli: verify is green and scoped") {
  const auto result = run_cli({"verify"});
  CHECK(result.status == 0);
  CHECK(result.out.find("FAIL") == std::string::npos);
  CHECK(result.out.find("table-checksum") != std::string::npos);

  const auto scoped = run_cli({"verify", "3D4", "--format", "csv"});
  CHECK(scoped.status == 0);
  CHECK(scoped.out.find("2E6") == std::string::npos);
}

TEST_CASE("cli: data format round-trips through the emitted document") {
  const auto result = run_cli({"table", "2E6", "--format", "data"});
  CHECK(result.status == 0);
  const auto table = taumap::table_from_json(result.out);
  CHECK(table == taumap::golden_table(taumap::TwistedType::twisted_e6()));
}

TEST_CASE("cli: usage errors exit with status 2") {
  CHECK(run_cli({}).status == 2);
  CHECK(run_cli({"tablez", "2E6"}).status == 2);
  CHECK(run_cli({"table"}).status == 2);
  CHECK(run_cli({"table", "2E6", "--format", "yaml"}).status == 2);
  CHECK(run_cli({"tau", "2E6"}).status == 2);
  const auto bad_group = run_cli({"table", "5Z9"});
  CHECK(bad_group.status == 2);
  CHECK(bad_group.err.find("usage error") != std::string::npos);
}

TEST_CASE("cli: rank bounds on group specs") {
  CHECK(run_cli({"enumerate", "2A:1"}).status == 2);
  CHECK(run_cli({"enumerate", "2D:3"}).status == 2);
  CHECK(run_cli({"enumerate", "2D:4"}).status == 0);
}

TEST_CASE("cli: every verb emits in every format") {
  const std::vector<std::vector<std::string>> commands = {
      {"enumerate", "2A:5"}, {"enumerate", "2E6"},
      {"table", "2E6"},      {"table", "3D4"},
      {"tau", "2E6", "--entry", "4_8"},
      {"fiber", "3D4", "--stratum", "2_1"},
      {"strata", "2E6"},
      {"centralizer", "2D:9", "--k", "3", "--r", "generic"},
      {"verify"}};
  for (const auto& base : commands)
    for (const std::string format : {"text", "data", "csv"}) {
      auto args = base;
      args.push_back("--format");
      args.push_back(format);
      const auto result = run_cli(args);
      CHECK_MESSAGE(result.status == 0, args[0], " --format ", format, ": ",
                    result.err);
      CHECK(!result.out.empty());
    }
}

TEST_CASE("cli: --out writes the file") {
  const std::string path = "cli_out_test.csv";
  const auto result =
      run_cli({"table", "3D4", "--format", "csv", "--out", path});
  CHECK(result.status == 0);
  CHECK(result.out.empty());
  std::ifstream file(path);
  REQUIRE(file.good());
  std::stringstream content;
  content << file.rdbuf();
  CHECK(content.str() ==
        taumap::table_to_csv(taumap::golden_table(taumap::TwistedType::triple_d4())));
  std::remove(path.c_str());
}
