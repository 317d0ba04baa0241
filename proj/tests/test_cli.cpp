#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "matroidlab/serialize.hpp"

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  const fs::path out_file =
      fs::temp_directory_path() / ("matroidlab_cli_out_" + std::to_string(counter++) + ".txt");
  const std::string cmd =
      std::string(MATROIDLAB_CLI_PATH) + " " + args + " > " + out_file.string() + " 2>&1";
  const int raw = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::ifstream in(out_file);
  std::ostringstream buf;
  buf << in.rdbuf();
  r.out = buf.str();
  fs::remove(out_file);
  return r;
}

}  // namespace

TEST_CASE("axioms subcommand: exhaustive window") {
  const auto r = run_cli("axioms --oracle m1 --window 2x2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("I1: PASS") != std::string::npos);
  CHECK(r.out.find("I2: PASS") != std::string::npos);
  CHECK(r.out.find("I3: PASS") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("axioms subcommand: json output parses") {
  const auto r = run_cli("axioms --oracle m --window 3x3 --format json");
  CHECK(r.exit_code == 0);
  const auto j = matroidlab::Json::parse(r.out);
  CHECK(j["command"] == "axioms");
  CHECK(j["all_pass"] == true);
  CHECK(j["checks"].size() == 4);
}

TEST_CASE("axioms subcommand: violating family fails with exit 1") {
  const auto r = run_cli("axioms --oracle badfamily --window 2x2");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("I2: FAIL") != std::string::npos);
}

TEST_CASE("axioms subcommand: sampled mode on large windows") {
  const auto r = run_cli("axioms --oracle m1 --window 8x8 --samples 200 --seed 7");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("sampled") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("usage and parse errors exit with 2") {
  CHECK(run_cli("axioms --window 4y4").exit_code == 2);
  CHECK(run_cli("axioms --oracle wat --window 2x2").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("witness --k 0").exit_code == 2);
  CHECK(run_cli("gap --set \"coltail x\"").exit_code == 2);
  CHECK(run_cli("verify /nonexistent/cert.json").exit_code == 2);
}

TEST_CASE("witness writes certificates that re-verify") {
  const fs::path dir = fs::temp_directory_path() / "matroidlab_cli_witness_dir";
  fs::remove_all(dir);
  const auto r = run_cli("witness --k 1..8 --out " + dir.string());
  CHECK(r.exit_code == 0);
  for (int k = 1; k <= 8; ++k) {
    const fs::path file = dir / ("k" + std::to_string(k) + ".json");
    REQUIRE(fs::exists(file));
    const auto v = run_cli("verify " + file.string());
    CHECK(v.exit_code == 0);
    CHECK(v.out.find("certificate: PASS VALID") != std::string::npos);
  }
  fs::remove_all(dir);
}

TEST_CASE("verify rejects a tampered certificate with exit 1") {
  const fs::path dir = fs::temp_directory_path() / "matroidlab_cli_tamper_dir";
  fs::remove_all(dir);
  REQUIRE(run_cli("witness --k 5 --out " + dir.string()).exit_code == 0);
  const fs::path file = dir / "k5.json";
  std::ifstream in(file);
  auto j = matroidlab::Json::parse(in);
  in.close();
  j["B"]["tails"][0]["start_row"] = 5;  // removes only 4 points: gap below k
  std::ofstream(file) << j.dump(2);
  const auto v = run_cli("verify " + file.string());
  CHECK(v.exit_code == 1);
  CHECK(v.out.find("certificate: FAIL INVALID") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("crosscheck subcommand") {
  const auto r = run_cli("crosscheck --oracle \"trunc(1,m1)\" --window 3x3 --samples 500 --seed 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
}

TEST_CASE("gap subcommand prints the numeric gap") {
  const auto r = run_cli("gap --set \"coltail 3 4\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "3\n");
  const auto zero = run_cli("gap --set \"ray 1 1 1\"");
  CHECK(zero.exit_code == 0);
  CHECK(zero.out == "0\n");
  // not a base: a verification failure, not a usage error
  CHECK(run_cli("gap --set \"coltail 3 5\"").exit_code == 1);
}

TEST_CASE("reports are deterministic for a fixed configuration") {
  const std::string cmd = "witness --k 3 --format json";
  CHECK(run_cli(cmd).out == run_cli(cmd).out);
  const std::string cross = "crosscheck --oracle m --window 4x4 --samples 1000 --seed 42 --format json";
  CHECK(run_cli(cross).out == run_cli(cross).out);
}
