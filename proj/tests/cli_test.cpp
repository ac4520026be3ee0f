#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

struct CliRun {
  std::string out;
  int code;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(FFIRRED_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  CliRun r{{}, -1};
  if (!pipe) return r;
  std::array<char, 512> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json run_json(const std::string& args, int expected_code) {
  const CliRun r = run(args + " --output json");
  EXPECT_EQ(r.code, expected_code) << args;
  return nlohmann::json::parse(r.out);
}

TEST(CliTest, TestVerdicts) {
  CliRun r = run("test --field 2 --poly 1,1,1");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "IRREDUCIBLE primitive ord=3 step=2\n");

  r = run("test --field 2 --poly 1,0,1");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "REDUCIBLE step=3 m=2\n");

  r = run("test --field 2 --poly 1,0,0,1");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "REDUCIBLE step=4 m=3 e=2\n");

  r = run("test --field 2 --poly 1,1,1,1,1");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "IRREDUCIBLE non-primitive ord=5 step=5\n");

  r = run("test --field 2 --poly 1,1,0,0,1,0,1 --max-divisors-only");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "REDUCIBLE step=5 m=21 l=3 rank=3<6\n");

  r = run("test --field 2 --poly \"t^6 + t^4 + t + 1\"");
  EXPECT_EQ(r.out, "REDUCIBLE step=5 m=21 l=1 rank=5<6\n");
}

TEST(CliTest, TestJson) {
  const auto j = run_json("test --field 2 --poly 1,1,0,0,1,0,1", 1);
  EXPECT_EQ(j["command"], "test");
  EXPECT_EQ(j["outcome"], "REDUCIBLE");
  EXPECT_EQ(j["order_m"], 21);
  EXPECT_EQ(j["decided_at_step"], 5);
  EXPECT_EQ(j["witness_e"], 6);
  EXPECT_EQ(j["witness_l"], 1);
  EXPECT_EQ(j["witness_r"], 5);
  EXPECT_EQ(j["exit_code"], 1);

  const auto k = run_json("test --field 3 --poly 2,1,1", 0);
  EXPECT_EQ(k["outcome"], "IRREDUCIBLE");
  EXPECT_EQ(k["primitive"], true);
  EXPECT_EQ(k["order_m"], 8);
  EXPECT_TRUE(k["witness_l"].is_null());
}

TEST(CliTest, VerifyPasses) {
  const CliRun r = run("test --field 3 --poly 1,2,0,1 --verify --seed 5");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verify=PASS seed=5"), std::string::npos);
}

TEST(CliTest, Order) {
  CliRun r = run("order --field 2 --poly 1,1,1,1,1");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "5\n");
  r = run("order --field 2 --poly 1,1,1,1,1 --fast-order");
  EXPECT_EQ(r.out, "5\n");
  r = run("order --field 2 --poly 1,0,1,0,1");
  EXPECT_EQ(r.out, "6\n");
  EXPECT_EQ(run("order --field 2 --poly 0,1,1").code, 2);
}

TEST(CliTest, EnumerateAndCount) {
  const auto j = run_json("enumerate --field 2 --degree 4", 0);
  ASSERT_EQ(j["polys"].size(), 3u);
  EXPECT_EQ(j["polys"][0]["poly"], "t^4 + t + 1");
  EXPECT_EQ(j["count"], 3);
  EXPECT_EQ(j["match"], true);

  const auto prim = run_json("enumerate --field 2 --degree 6 --primitive", 0);
  EXPECT_EQ(prim["count"], 6);
  const auto ord = run_json("enumerate --field 2 --degree 4 --order 5", 0);
  EXPECT_EQ(ord["count"], 1);

  const CliRun c = run("count --field 2 --degree 8");
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.out, "count=30 enumerated=30 MATCH\n");
}

TEST(CliTest, GenerateAndFindPrimitive) {
  CliRun r = run("find-primitive --field 2 --degree 4");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "t^4 + t + 1\n");

  const auto j = run_json("generate --field 2 --poly 1,1,0,0,1 --target-degree 4", 0);
  EXPECT_EQ(j["total"], 3);
  ASSERT_EQ(j["buckets"].size(), 2u);
  EXPECT_EQ(j["buckets"][0]["order"], 5);
  EXPECT_EQ(j["buckets"][1]["polys"][0]["multiplicity"], 4);

  r = run("generate --field 2 --poly 1,0,1 --target-degree 1");
  EXPECT_EQ(r.code, 2);
  const auto err = run_json("generate --field 2 --poly 1,0,1 --target-degree 1", 2);
  EXPECT_EQ(err["error"], "NotPrimitive");
}

TEST(CliTest, ExtensionField) {
  const CliRun r = run("count --field 2^2 --degree 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "count=6 enumerated=6 MATCH\n");
  const auto j = run_json("test --field 4 --poly 1,1", 2);
  EXPECT_EQ(j["error"], "NotPrime");
}

TEST(CliTest, UsageAndInputErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("test --poly 1,1").code, 2);
  EXPECT_EQ(run("test --field 2 --poly 1,1 --output xml").code, 2);
  EXPECT_EQ(run("test --field 2 --poly 1,x").code, 2);
  EXPECT_EQ(run("test --field 3 --poly 1,5").code, 2);
  EXPECT_EQ(run("test --field 3 --poly 1,2").code, 2);  // not monic
}

TEST(CliTest, OutFileMirrorsJson) {
  const auto path = std::filesystem::temp_directory_path() / "ffirred_cli_test_out.json";
  std::filesystem::remove(path);
  const CliRun r = run("test --field 2 --poly 1,1,1 --out " + path.string());
  EXPECT_EQ(r.code, 0);
  std::ifstream in(path);
  ASSERT_TRUE(in);
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["outcome"], "IRREDUCIBLE");
  EXPECT_EQ(j["exit_code"], 0);
  std::filesystem::remove(path);
}

}  // namespace
