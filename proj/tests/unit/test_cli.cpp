#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#ifdef AVINV_CLI

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  Run r;
  const std::string cmd = std::string(AVINV_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  while (auto n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int st = pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

}  // namespace

TEST_CASE("cli exit codes follow the error families") {
  CHECK(run("").status == 2);
  CHECK(run("tables --which 99").status == 2);
  CHECK(run("analyze --coeffs 1,0,0 --p 2 --n 1").status == 2);
  CHECK(run("analyze 9.2.x --offline").status == 3);
  CHECK(run("analyze 2.5.a_a --offline --fixtures-dir /nonexistent").status == 6);
  CHECK(run("subgroups --d 5").status == 2);
}

TEST_CASE("cli analyze") {
  auto r = run("analyze 2.4.ac_e --offline --format records");
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["group"]["label"] == "C4.4.t.a.1");
  CHECK(j["angle_rank"]["value"] == 0);

  r = run("analyze --product 1.19.i 3.19.a_j_acm --offline --format records");
  REQUIRE(r.status == 0);
  const auto k = nlohmann::json::parse(r.out);
  CHECK(k["group"]["order"] == 6);
  CHECK(k["angle_rank"]["value"] == 3);
  CHECK(k["factors"].size() == 2);

  r = run("analyze --coeffs 1,-1,2 --p 2 --n 1");
  CHECK(r.status == 0);
  CHECK(r.out.find("W2.2.t.a.1") != std::string::npos);
}

TEST_CASE("cli tables and subgroups") {
  auto r = run("tables --which 1");
  CHECK(r.status == 0);
  CHECK(r.out.find("MISMATCH") == std::string::npos);
  CHECK(r.out.find("C6.6.t.a.4") != std::string::npos);
  CHECK(run("tables --which 1") .out == r.out);
  CHECK(run("tables --which 10 --verify --offline").status == 0);
  r = run("subgroups --d 1");
  CHECK(r.status == 0);
  CHECK(r.out.find("2 subgroups of W2") != std::string::npos);
}

TEST_CASE("cli search") {
  auto r = run("search --d 1 --p 2 --format records");
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["realized"].size() == 2);
}

#endif
