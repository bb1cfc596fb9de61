#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(OMEGA_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe))
    r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("profiles lists the twelve profiles deterministically") {
  auto a = run_cli("profiles");
  auto b = run_cli("profiles");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("c=0,d=0,k=fin") != std::string::npos);
  CHECK(a.out.find("c=inf,d=inf,k=inf") != std::string::npos);
}

TEST_CASE("witness report") {
  auto r = run_cli("witness double --report 100,200,10");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"d_obs\":50") != std::string::npos);
  CHECK(r.out.find("\"profile\":\"c=0,d=inf,k=fin\"") != std::string::npos);
}

TEST_CASE("member query answers and unknown ids fail with exit 1") {
  auto r = run_cli("member S3 double");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"member\":true") != std::string::npos);

  auto r2 = run_cli("member S{1,2} succ");
  CHECK(r2.exit_code == 0);
  CHECK(r2.out.find("\"member\":false") != std::string::npos);

  CHECK(run_cli("member S3 nonsense").exit_code == 1);
  CHECK(run_cli("member W double").exit_code == 1);
}

TEST_CASE("certify emits a verified certificate") {
  auto r = run_cli(
      "certify --lemma techk:i --u cproj_double --f cproj_double_shift "
      "--window 1000");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"ok\":true") != std::string::npos);
  CHECK(r.out.find("\"lemma_tag\":\"techk:i\"") != std::string::npos);

  // Hypothesis violations are precondition errors.
  CHECK(run_cli("certify --lemma tech:i --u merge01 --f pred").exit_code == 1);
}

TEST_CASE("crosscheck-table exits zero on a clean table") {
  auto r = run_cli("crosscheck-table");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"mismatches\":0") != std::string::npos);
}

TEST_CASE("lattice reports the interval count") {
  auto r = run_cli("lattice --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"interval_count\": 38") != std::string::npos);
  auto d = run_cli("lattice --format dot");
  CHECK(d.exit_code == 0);
  CHECK(d.out.find("digraph interval") == 0);
}

TEST_CASE("maximal lists covers and flags the statement erratum") {
  auto r = run_cli("maximal S5");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("S{1,5}") != std::string::npos);
  CHECK(r.out.find("S{4,5}") != std::string::npos);

  auto r2 = run_cli("maximal S2");
  CHECK(r2.exit_code == 0);
  CHECK(r2.out.find("\"statement_erratum\":true") != std::string::npos);
  CHECK(r2.out.find("S{2,3}") != std::string::npos);
}

TEST_CASE("byte-identical reruns") {
  for (const char* cmd : {"lattice --format json", "maximal V", "profiles",
                          "witness cproj"}) {
    auto a = run_cli(cmd);
    auto b = run_cli(cmd);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.out == b.out);
  }
}
