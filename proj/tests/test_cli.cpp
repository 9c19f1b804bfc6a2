// Drives the installed CLI binary end to end: exit codes, output formats,
// and byte-level determinism.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "test_helpers.hpp"

namespace {

namespace fs = std::filesystem;

struct CliResult {
  int exit_code;
  std::string out;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "pcmlab_cli_tests";
  fs::create_directories(dir);
  return dir;
}

CliResult run_cli(const std::string& args) {
  static int counter = 0;
  const fs::path out_file =
      scratch_dir() / ("stdout_" + std::to_string(counter++) + ".txt");
  const std::string cmd = std::string(PCMLAB_CLI_PATH) + " " + args + " > " +
                          out_file.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
#ifdef __unix__
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
#else
  const int code = status;
#endif
  return {code, slurp(out_file)};
}

std::string fixture(const std::string& name) {
  return pcmlab::testing::fixture_path(name);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("index: consistent matrix reports zero CI and lambda_max n") {
  const auto r = run_cli("index --kind ci --in " + fixture("consistent3.csv"));
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(std::abs(j["value"].get<double>()) <= 1e-10);
  CHECK(j["lambda_max"].get<double>() == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(j["nu"] == 0.0);
}

TEST_CASE("index accepts the JSON matrix format") {
  const fs::path json_matrix = scratch_dir() / "consistent.json";
  std::ofstream(json_matrix)
      << R"({"n": 3, "rows": [[1.0, 0.5, 0.25], [2.0, 1.0, 0.5], [4.0, 2.0, 1.0]]})";
  const auto r = run_cli("index --kind gci --in " + json_matrix.string());
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(std::abs(j["value"].get<double>()) <= 1e-12);
}

TEST_CASE("index: NI echoes its parameters") {
  const auto r = run_cli("index --kind ni --gamma 2 --in " +
                         fixture("extreme_pair_a.csv"));
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["gamma"] == 2.0);
  CHECK(j["sigma"] == 9.0);
  CHECK(j["value"].get<double>() > 0.0);
}

TEST_CASE("exit codes: domain errors 1, io errors 2") {
  const fs::path bad = scratch_dir() / "two_by_two.csv";
  std::ofstream(bad) << "1,2\n0.5,1\n";
  CHECK(run_cli("index --kind ci --in " + bad.string()).exit_code == 1);
  CHECK(run_cli("index --kind ci --in /does/not/exist.csv").exit_code == 2);

  const fs::path junk = scratch_dir() / "junk.csv";
  std::ofstream(junk) << "1,frog,1\n1,1,1\n1,1,1\n";
  CHECK(run_cli("index --kind ci --in " + junk.string()).exit_code == 2);

  CHECK(run_cli("index --kind nosuch --in " + fixture("consistent3.csv"))
            .exit_code == 1);
  // Config errors (missing required flags, unknown commands) also exit 1.
  CHECK(run_cli("index").exit_code == 1);
  CHECK(run_cli("nosuchcommand").exit_code == 1);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("aggregate: opposing extremes collapse to unanimity") {
  const auto r = run_cli("aggregate --in " + fixture("extreme_pair_a.csv") +
                         " --in " + fixture("extreme_pair_b.csv") +
                         " --weights 0.5,0.5");
  REQUIRE(r.exit_code == 0);
  std::stringstream lines(r.out);
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    std::stringstream cells(line);
    std::string cell;
    int cols = 0;
    while (std::getline(cells, cell, ',')) {
      ++cols;
      CHECK(std::abs(std::stod(cell) - 1.0) <= 1e-12);
    }
    CHECK(cols == 3);
  }
  CHECK(rows == 3);
}

TEST_CASE("aggregate writes json when asked") {
  const fs::path out = scratch_dir() / "agg.json";
  const auto r = run_cli("aggregate --in " + fixture("k_pair_a.csv") +
                         " --in " + fixture("k_pair_b.csv") + " --out " +
                         out.string());
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(slurp(out));
  CHECK(j["n"] == 3);
  CHECK(j["rows"].size() == 3);
}

TEST_CASE("sweep: K on the recorded pair crosses 26/27 at the midpoint") {
  const auto r = run_cli("sweep --kind k --a " + fixture("k_pair_a.csv") +
                         " --b " + fixture("k_pair_b.csv") + " --steps 100");
  REQUIRE(r.exit_code == 0);
  std::stringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "lambda,value");
  bool found_mid = false;
  while (std::getline(lines, line)) {
    if (line.rfind("0.5,", 0) == 0) {
      found_mid = true;
      const double value = std::stod(line.substr(4));
      CHECK(value == doctest::Approx(26.0 / 27.0).epsilon(1e-12));
      CHECK(std::abs(value - 0.963) < 0.005);
    }
  }
  CHECK(found_mid);
}

TEST_CASE("search: expectation flags map to exit codes") {
  CHECK(run_cli("search --kind re --property ub --trials 10 --seed 1 "
                "--expect-violation").exit_code == 0);
  CHECK(run_cli("search --kind ci --property ub --trials 10 --seed 1 "
                "--expect-violation").exit_code == 3);
  CHECK(run_cli("search --kind ci --property ub --trials 10 --seed 1 "
                "--expect-no-violation").exit_code == 0);
  CHECK(run_cli("search --kind re --property ub --trials 10 --seed 1 "
                "--expect-no-violation").exit_code == 3);
}

TEST_CASE("search output is valid verdict json") {
  const auto r =
      run_cli("search --kind im --property ub --trials 10 --seed 4");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["status"] == "violated");
  CHECK(j["counterexample"]["matrices"].size() == 2);
}

TEST_CASE("axioms: CI passes all five on a smoke run") {
  const auto r = run_cli("axioms --kind ci --samples 20 --seed 2");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  for (const char* a : {"A1", "A2", "A3", "A4", "A5"}) {
    CHECK(j["axioms"][a] == "passed_sampled");
  }
}

TEST_CASE("byte-identical reruns for identical config and seed") {
  const std::string sweep_args = "sweep --kind gci --a " +
                                 fixture("re_pair_a.csv") + " --b " +
                                 fixture("re_pair_b.csv") + " --steps 40";
  CHECK(run_cli(sweep_args).out == run_cli(sweep_args).out);

  const std::string search_args =
      "search --kind gw --property ub --trials 300 --seed 11";
  CHECK(run_cli(search_args).out == run_cli(search_args).out);

  const std::string table_args = "table --trials 200 --seed 3";
  const auto t1 = run_cli(table_args);
  const auto t2 = run_cli(table_args);
  REQUIRE(t1.exit_code == 0);
  CHECK(t1.out == t2.out);
}

TEST_CASE("table renders nine rows and writes csv") {
  const fs::path out = scratch_dir() / "table.csv";
  const auto r = run_cli("table --trials 150 --seed 5 --out " + out.string());
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("Index") != std::string::npos);
  CHECK(r.out.find("I_CD") != std::string::npos);

  const std::string csv = slurp(out);
  std::stringstream lines(csv);
  std::string line;
  int rows = 0;
  std::getline(lines, line);
  CHECK(line == "index,LB,UB,SUB");
  while (std::getline(lines, line)) {
    if (!line.empty()) {
      ++rows;
      CHECK(line.find(",✗,") != std::string::npos);  // LB always fails
    }
  }
  CHECK(rows == 9);
}

}  // TEST_SUITE
