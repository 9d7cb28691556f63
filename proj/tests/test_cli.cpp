// End-to-end tests for the `elgot` binary. The build passes the binary and
// program-directory paths as compile definitions.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#ifndef ELGOT_CLI_PATH
#error "ELGOT_CLI_PATH must be defined by the build"
#endif
#ifndef ELGOT_PROGRAMS_DIR
#error "ELGOT_PROGRAMS_DIR must be defined by the build"
#endif

namespace {

struct Result {
  int exit_code;
  std::string out;
};

Result run_cli(const std::string& args) {
  std::string cmd = std::string(ELGOT_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return Result{WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

const std::string kCountdown = std::string(ELGOT_PROGRAMS_DIR) + "/countdown.whl";
const std::string kLoop = std::string(ELGOT_PROGRAMS_DIR) + "/loop.whl";

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("run countdown, extensional backend") {
  Result r = run_cli("run " + kCountdown + " --backend extensional");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "x = 3"));
}

TEST_CASE("run countdown, intensional backend converges") {
  Result r = run_cli("run " + kCountdown);
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "x = 3"));
}

TEST_CASE("run diverging loop with small fuel reports UNKNOWN, exit 0") {
  Result r = run_cli("run " + kLoop + " --fuel 10");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "UNKNOWN after 10 steps"));
}

TEST_CASE("run diverging loop, extensional backend says DIVERGES") {
  Result r = run_cli("run " + kLoop + " --backend extensional");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "DIVERGES"));
}

TEST_CASE("trace prints one line per step plus a status line") {
  Result r = run_cli("trace " + kCountdown + " --fuel 3");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "0: "));
  CHECK(contains(r.out, "2: "));
  CHECK(contains(r.out, "FUEL EXHAUSTED after 3 steps"));

  Result full = run_cli("trace " + kCountdown + " --fuel 100");
  CHECK(full.exit_code == 0);
  CHECK(contains(full.out, "CONVERGED: x = 3"));
}

TEST_CASE("collapse agrees on both a converging and a diverging program") {
  Result r = run_cli("collapse " + kCountdown);
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "AGREE"));

  Result d = run_cli("collapse " + kLoop);
  CHECK(d.exit_code == 0);
  CHECK(contains(d.out, "AGREE"));
  CHECK(contains(d.out, "DIVERGES"));
}

TEST_CASE("laws --suite restriction --output json passes with empty failures") {
  Result r = run_cli("laws --suite restriction --max-size 2 --output json");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "\"suite\": \"restriction\""));
  CHECK(contains(r.out, "\"failures\": []"));
}

TEST_CASE("laws JSON is byte-identical across runs with --deterministic") {
  const std::string args =
      "laws --suite delay --seed 7 --deterministic --output json";
  Result a = run_cli(args);
  Result b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("").exit_code == 2);                       // missing subcommand
  CHECK(run_cli("run").exit_code == 2);                    // missing program
  CHECK(run_cli("frobnicate").exit_code == 2);             // unknown subcommand
  CHECK(run_cli("run x.whl --backend bogus").exit_code == 2);
  CHECK(run_cli("laws --suite bogus").exit_code == 2);     // unknown suite
}

TEST_CASE("program errors exit with code 1") {
  Result r = run_cli("run /nonexistent.whl");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.out, "error:"));
}

TEST_CASE("--help exits 0") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("laws --help").exit_code == 0);
}
