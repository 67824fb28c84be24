/**
 * @file test_cli.cpp
 * @brief Subprocess tests of the command-line tool: byte-stable output,
 *        exit-code contract, and the shape of each payload.
 */
#include <sys/wait.h>

#include <cstdio>
#include <string>

#include <catch_amalgamated.hpp>
#include <json.hpp>

namespace {

struct RunOut {
  int code = -1;
  std::string out;
};

/// Run the tool with the given argument string, capture stdout and the exit
/// code; stderr is dropped.
RunOut run_cli(const std::string& args) {
  const std::string cmd =
      std::string(ISCHUR_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  RunOut r;
  if (p == nullptr) return r;
  char buf[4096];
  size_t nr;
  while ((nr = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, nr);
  const int rc = pclose(p);
  r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

// a one-band matrix at (1,1,2) and a matrix with two bands, both with their
// margins, used to drive the product paths
const std::string kBand =
    "'[[0,0,0,0,0],[0,0,0,0,0],[0,1,3,1,0],[0,0,0,0,0],[0,0,0,0,0]]'";
const std::string kTwoBand =
    "'[[0,0,0,0,0],[0,0,1,0,0],[0,1,1,1,0],[0,0,1,0,0],[0,0,0,0,0]]'";
// diagonal matrices of the margins (1,1,0) and (0,1,1)
const std::string kDiag110 =
    "'[[0,0,0,0,0],[0,1,0,0,0],[0,0,3,0,0],[0,0,0,1,0],[0,0,0,0,0]]'";
const std::string kDiag011 =
    "'[[1,0,0,0,0],[0,1,0,0,0],[0,0,1,0,0],[0,0,0,1,0],[0,0,0,0,1]]'";

}  // namespace

TEST_CASE("repeated canonical runs are byte-identical") {
  const RunOut a = run_cli("canonical --m 1 --n 1 --d 2");
  const RunOut b = run_cli("canonical --m 1 --n 1 --d 2");
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  REQUIRE(!a.out.empty());
  REQUIRE(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["schema"] == "ischur/1");
  CHECK(j["count"] == 85);
  CHECK(j["table"].size() == 85);
}

TEST_CASE("the trivial canonical table is the identity") {
  const RunOut r = run_cli("canonical --d 1");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["count"] == 1);
  REQUIRE(j["table"][0]["element"].size() == 1);
  CHECK(j["table"][0]["element"][0]["index"] == 0);
  CHECK(j["table"][0]["element"][0]["coeff"] == "1");
}

TEST_CASE("enumerate reports counts equal to the formula") {
  const RunOut r = run_cli("enumerate --m 1 --n 1 --d 2");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["count"] == 85);
  CHECK(j["formula"] == "85");
  CHECK(j["matrices"].size() == 85);

  const RunOut v = run_cli("enumerate --m 1 --n 1 --d 2 --variant");
  REQUIRE(v.code == 0);
  const auto jv = nlohmann::json::parse(v.out);
  CHECK(jv["count"] == 32);
  CHECK(jv["formula"] == "32");
  for (const auto& row : jv["matrices"]) CHECK(row["variant"] == true);
}

TEST_CASE("verify exits zero on the default and variant suites") {
  const RunOut r = run_cli("verify --m 1 --n 1 --d 2");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["all_pass"] == true);
  CHECK(j["failed"] == 0);

  const RunOut v = run_cli("verify --m 1 --n 1 --d 2 --variant --jobs 3");
  REQUIRE(v.code == 0);
  const auto jv = nlohmann::json::parse(v.out);
  CHECK(jv["all_pass"] == true);
  CHECK(jv["checks"].size() == j["checks"].size() + 3);
  // parallelism does not change the payload
  const RunOut v1 = run_cli("verify --m 1 --n 1 --d 2 --variant");
  CHECK(v1.out == v.out);
}

TEST_CASE("products run under every engine selection") {
  const std::string base = "multiply --m 1 --n 1 --d 2 ";
  // diagonal left factor acts as the identity
  const RunOut gen =
      run_cli(base + "--left " + kDiag110 + " --right " + kTwoBand +
              " --engine generic");
  REQUIRE(gen.code == 0);
  const auto jg = nlohmann::json::parse(gen.out);
  REQUIRE(jg["result"].size() == 1);
  CHECK(jg["result"][0]["coeff"] == "1");

  // closed and generic agree on a one-band left factor
  const RunOut both = run_cli(base + "--left " + kBand + " --right " +
                              kDiag110 + " --engine both");
  REQUIRE(both.code == 0);
  const auto jb = nlohmann::json::parse(both.out);
  CHECK(jb["equal"] == true);

  // margin mismatch is a zero result, not an error
  const RunOut mis = run_cli(base + "--left " + kDiag011 + " --right " +
                             kTwoBand + " --engine generic");
  REQUIRE(mis.code == 0);
  const auto jm = nlohmann::json::parse(mis.out);
  CHECK(jm["margin_mismatch"] == true);
  CHECK(jm["result"].empty());
}

TEST_CASE("usage errors exit with code two") {
  CHECK(run_cli("enumerate --d 0").code == 2);
  CHECK(run_cli("enumerate --m 2 --n 2 --d 2").code == 2);
  CHECK(run_cli("bogus --d 1").code == 2);
  CHECK(run_cli("multiply --m 1 --n 1 --d 2 --left '[[1]]' --right '[[1]]'")
            .code == 2);
  // a two-band left factor cannot use the closed engine
  CHECK(run_cli("multiply --m 1 --n 1 --d 2 --left " + kTwoBand +
                " --right " + kDiag110 + " --engine closed")
            .code == 2);
}

TEST_CASE("the guardrail lifts with the override flag") {
  const RunOut r = run_cli("enumerate --d 5 --force-large");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["count"] == 1);
  CHECK(j["matrices"][0]["entries"][0][0] == 11);
}
