#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "msym/cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const std::string kQ3 = "q=3;a=[0,0,0,1,2]";
const std::string kQ2 = "q=2;a=[0,0,1,1,1]";
const std::string kSample = std::string(MSYM_TEST_DATA) + "/e3_sample.txt";

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = msym::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp(const std::string& name) { return (fs::temp_directory_path() / name).string(); }

}  // namespace

TEST(Cli, CurveInfo) {
  const Result r = run({"curve-info", kQ3});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("0     ns"), std::string::npos);
  EXPECT_NE(r.out.find("1     s     (1,1) (1,2)"), std::string::npos);
  EXPECT_NE(r.out.find("2     os    (2,0)"), std::string::npos);
  EXPECT_NE(r.out.find("inf   os    inf"), std::string::npos);
  EXPECT_NE(r.out.find("|E| = 4"), std::string::npos);
}

TEST(Cli, CurveInfoJson) {
  const Result r = run({"curve-info", kQ3, "--format", "json"});
  const json j = json::parse(r.out);
  EXPECT_EQ(j["count"], 4);
  EXPECT_EQ(j["fibers"][1]["type"], "s");
  EXPECT_TRUE(j["hasse_ok"].get<bool>());
}

TEST(Cli, PresentationQ2) {
  const Result r = run({"presentation", kQ2});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("generators 3"), std::string::npos);
  EXPECT_NE(r.out.find("homology 0\n"), std::string::npos);
  const json j = json::parse(run({"presentation", kQ2, "--format", "json"}).out);
  EXPECT_EQ(j["cols"], 3);
  EXPECT_EQ(j["homology"]["group"], "0");
}

TEST(Cli, ReduceSampleFile) {
  const Result r = run({"reduce", kQ3, kSample, "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_TRUE(j["verified"].get<bool>());
  EXPECT_EQ(j["certificate"]["combination"].size(), 1u);
  EXPECT_EQ(j["certificate"]["combination"][0]["rule"], "E3");
}

TEST(Cli, VerifyRoundTripAndTamper) {
  const std::string cert = temp("msym_cli_cert.json");
  ASSERT_EQ(run({"reduce", kQ3, kSample, "--out", cert}).code, 0);
  EXPECT_EQ(run({"verify", kQ3, kSample, cert}).code, 0);

  json j;
  std::ifstream(cert) >> j;
  j["combination"][0]["multiplier"] = 2;
  std::ofstream(cert) << j.dump();
  const Result bad = run({"verify", kQ3, kSample, cert});
  EXPECT_EQ(bad.code, 2);
  std::remove(cert.c_str());
}

TEST(Cli, DomainErrorsAreJson) {
  const Result r = run({"curve-info", "q=3;a=[0,0,0,0,0]"});
  EXPECT_EQ(r.code, 1);
  const json j = json::parse(r.err);
  EXPECT_EQ(j["error"], "SingularCurve");
  EXPECT_EQ(run({"classify", kQ3, "{/1/0,/1/0}"}).code, 1);
  EXPECT_EQ(run({"reduce", kQ3, "/nonexistent/file"}).code, 1);
}

TEST(Cli, UsageErrors) {
  const Result r = run({"no-such-command"});
  EXPECT_EQ(r.code, 64);
  EXPECT_EQ(json::parse(r.err)["error"], "UsageError");
  EXPECT_EQ(run({"presentation", kQ3, "--scope", "some"}).code, 64);
  EXPECT_EQ(run({}).code, 64);
}

TEST(Cli, Decompose) {
  const Result r = run({"decompose", kQ3, "{/1/0,/1/1/1/0}", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  ASSERT_EQ(j["pieces"].size(), 2u);
  EXPECT_EQ(j["pieces"][0]["symbol"], "{/1/0,/1/1}");
}

TEST(Cli, TreeBallAndQuotientTree) {
  EXPECT_EQ(run({"tree-ball", kQ3, "/2/0/1", "1"}).out,
            "/2/0 c((2,0),1) [c, 1]\n/2/0/1 e((2,0)) [e, 0]\n/2/0/1/0 c((2,0),1) [c, 1]\n"
            "/2/0/1/1 c((2,0),1) [c, 1]\n/2/0/1/2 c((2,0),1) [c, 1]\n");
  const Result dot = run({"quotient-tree", kQ3, "--format", "dot"});
  EXPECT_EQ(dot.code, 0);
  EXPECT_EQ(dot.out.rfind("graph", 0), 0u);
}

TEST(Cli, SampleThenReduceIsDeterministic) {
  const Result a = run({"sample", kQ3, "--seed", "9"});
  const Result b = run({"sample", kQ3, "--seed", "9"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, run({"sample", kQ3, "--seed", "10"}).out);
  const std::string file = temp("msym_cli_sample.txt");
  std::ofstream(file) << a.out;
  const Result r1 = run({"reduce", kQ3, file, "--format", "json"});
  const Result r2 = run({"reduce", kQ3, file, "--format", "json"});
  EXPECT_EQ(r1.code, 0);
  EXPECT_EQ(r1.out, r2.out);
  std::remove(file.c_str());
}

TEST(Cli, Fuzz) {
  const Result r = run({"fuzz", kQ3, "--n", "10", "--seed", "3"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("all properties hold"), std::string::npos);
}
