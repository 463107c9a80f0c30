#include <gtest/gtest.h>

#include <sstream>

#include "strops/cli.hpp"

namespace strops::cli {
namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "strops");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, RingTable) {
  auto r = run({"ring", "--space", "cp2", "--kind", "intersection"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("c(-2)"), std::string::npos);
  EXPECT_NE(r.out.find("c * c = c^2"), std::string::npos);
  EXPECT_NE(r.out.find("-4         0     1  c^2"), std::string::npos);
}

TEST(Cli, RingJsonCarriesBothDegrees) {
  auto r = run({"ring", "--space", "cp2", "--kind", "intersection", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  auto doc = Json::parse(r.out);
  ASSERT_EQ(doc["entries"].size(), 3u);
  EXPECT_EQ(doc["entries"][2]["degree"], -4);
  EXPECT_EQ(doc["entries"][2]["unshifted_degree"], 0);
  EXPECT_EQ(doc["products"].size(), 6u);
  // the presentation can be read back
  auto ring = ring_from_json(doc["presentation"]);
  EXPECT_EQ(ring->basis_in_degree(-4).size(), 1u);
}

TEST(Cli, Deterministic) {
  auto a = run({"string-ring", "--base", "gr2,4", "--fiber", "o2", "--format", "json"});
  auto b = run({"string-ring", "--base", "gr2,4", "--fiber", "o2", "--format", "json"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, NegativeWindow) {
  auto r = run({"string-ring", "--base", "cp3", "--fiber", "s1", "--window", "-4:0"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("c^2"), std::string::npos);
  EXPECT_EQ(r.out.find("c^3"), std::string::npos);
}

TEST(Cli, Squares) {
  auto r = run({"sq", "--space", "rp4", "--i", "1", "--class", "a^3"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("Sq^1(a^3) = a^4"), std::string::npos);
  r = run({"sq", "--space", "rp2", "--i", "1", "--class", "1", "--twisted"});
  EXPECT_NE(r.out.find("= a"), std::string::npos);
}

TEST(Cli, E2AndVerify) {
  auto r = run({"e2", "--base", "s2", "--fiber", "s1", "--tmax", "2", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["entries"].size(), 4u);
  r = run({"verify", "--base", "rp3", "--fiber", "s1"});
  EXPECT_EQ(r.code, 0) << r.err << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, Towers) {
  auto r = run({"tower", "--group", "s1", "--levels", "3", "--limit"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("limit on window -4:1"), std::string::npos);
  r = run({"tower", "--group", "o2", "--levels", "4", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto doc = Json::parse(r.out);
  EXPECT_TRUE(doc["certificate"]["inequivalent"].get<bool>());
  EXPECT_EQ(doc["levels"][1]["adjoint"]["sq1t"], "injective");
}

TEST(Cli, Qop) {
  auto r = run({"qop", "--space", "rp4", "--i", "0", "--class", "PD(a)"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("Q_0(alpha) = alpha^2"), std::string::npos);
  r = run({"qop", "--space", "rp4", "--i", "1", "--class", "alpha"});
  EXPECT_NE(r.out.find("= alpha"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"ring"}).code, kExitUsage);
  EXPECT_EQ(run({"ring", "--space", "cp2", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(run({"ring", "--space", "klein"}).code, kExitDomain);
  EXPECT_EQ(run({"ring", "--space", "rp2", "--coeffs", "Z"}).code, kExitDomain);
  EXPECT_EQ(run({"sq", "--space", "rp2", "--i", "1", "--class", "q"}).code, kExitDomain);
  EXPECT_EQ(run({"string-ring", "--base", "cp1", "--fiber", "omegaS3"}).code, kExitDomain);
  EXPECT_EQ(run({"tower", "--group", "s1", "--levels", "2", "--limit", "--window", "-8:0"}).code, kExitDomain);
  auto help = run({"--help"});
  EXPECT_EQ(help.code, kExitOk);
  EXPECT_NE(help.out.find("string-ring"), std::string::npos);
}

TEST(Cli, DegreeBoundFromEnvironment) {
  setenv("STROPS_DEGREE_BOUND", "zero", 1);
  EXPECT_EQ(run({"ring", "--space", "cp1"}).code, kExitUsage);
  setenv("STROPS_DEGREE_BOUND", "24", 1);
  EXPECT_EQ(run({"ring", "--space", "cp1"}).code, kExitOk);
  EXPECT_EQ(default_degree_bound(), 24);
  unsetenv("STROPS_DEGREE_BOUND");
  degree_bound_setting().store(16);
}

}  // namespace
}  // namespace strops::cli
