#include <gtest/gtest.h>

#include <cstdlib>
#include <nlohmann/json.hpp>
#include <sstream>

#include "arthur/cli.hpp"

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Outcome r;
  r.code = arthur::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

nlohmann::json run_json(std::vector<std::string> args, int want = 0) {
  args.insert(args.begin(), {"--format", "json"});
  const Outcome r = run(args);
  EXPECT_EQ(r.code, want) << r.err;
  return nlohmann::json::parse(r.out);
}

const std::string kSp2 = "Sp(2): chi[1,O]@S(1)xS(1)^2 + one[1,O]@S(1)xS(1)";
const std::string kSo3 = "SO(3,split): one[1,O]@S(2)xS(1)";

}  // namespace

TEST(Cli, DualOfSp2) {
  const auto j = run_json({"dual", kSp2, "--char", "+,+"});
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["command"], "dual");
  EXPECT_EQ(j["results"]["char_positional"], "-,+");
  EXPECT_EQ(j["results"]["sign"], 1);
  EXPECT_TRUE(j["violations"].empty());
}

TEST(Cli, TextOutputHasSections) {
  const Outcome r = run({"dual", kSp2, "--char", "+,+"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("inputs:"), std::string::npos);
  EXPECT_NE(r.out.find("results:"), std::string::npos);
  EXPECT_NE(r.out.find("-,+"), std::string::npos);
}

TEST(Cli, CompareArthurFlagsBothExamples) {
  EXPECT_EQ(run_json({"compare-arthur", kSp2, "--char", "+,+"})["results"]["contradiction"], true);
  const auto j = run_json({"compare-arthur", kSo3});
  EXPECT_EQ(j["results"]["contradiction"], true);
  EXPECT_EQ(j["results"]["beta_phi"], -1);
  EXPECT_EQ(j["results"]["beta_phi_psi"], 1);
}

TEST(Cli, SignsAndClassify) {
  const auto j = run_json({"signs", kSo3});
  EXPECT_EQ(j["results"]["beta_phi"], -1);
  const auto c = run_json({"classify", kSp2});
  EXPECT_EQ(c["command"], "classify");
  EXPECT_EQ(run_json({"component", kSp2})["results"]["characters_for_form"].size(), 2u);
}

TEST(Cli, EndoscopyAndMw) {
  const auto j = run_json({"endoscopy", kSp2, "--element", "chi@S(1)xS(1): +1^1 -1^1"});
  EXPECT_TRUE(j["violations"].empty());
  const auto m = run_json({"mw-character", kSp2});
  EXPECT_TRUE(m["violations"].empty());
}

TEST(Cli, GenericDual) {
  const auto j = run_json({"generic-dual", "SO(3,split): ; one[1,O]@S(2)xS(1)"});
  EXPECT_EQ(j["results"]["chain_moves_established"], true);
  EXPECT_TRUE(j["violations"].empty());
}

TEST(Cli, VerifyExamples) {
  const auto j = run_json({"verify", "--suite", "examples"});
  EXPECT_FALSE(j["results"]["checks"].empty());
}

TEST(Cli, VerifyRandomCountZero) {
  const auto j = run_json({"--count", "0", "verify", "--suite", "random"});
  for (const auto& s : j["results"]["suites"]) EXPECT_EQ(s["instances"], 0);
}

TEST(Cli, VerifyLiteralSuiteExitsOne) {
  const auto j = run_json({"--count", "200", "verify", "--suite", "random", "--name", "dual_sign_literal"}, 1);
  EXPECT_FALSE(j["violations"].empty());
}

TEST(Cli, SerialAndParallelAgree) {
  const Outcome a = run({"--format", "json", "--seed", "9", "--count", "80", "verify", "--suite", "random"});
  const Outcome b = run({"--format", "json", "--seed", "9", "--count", "80", "verify", "--suite", "random", "--serial"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(nlohmann::json::parse(a.out)["results"], nlohmann::json::parse(b.out)["results"]);
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args{"--format", "json", "--seed", "4", "--count", "50", "verify", "--suite", "random"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, SeedFallsBackToEnvironment) {
  ::setenv("ARTHUR_CALC_SEED", "77", 1);
  const auto j = run_json({"--count", "1", "verify", "--suite", "random"});
  EXPECT_EQ(j["inputs"]["seed"], "77");
  ::setenv("ARTHUR_CALC_SEED", "x7", 1);
  EXPECT_EQ(run({"--count", "1", "verify", "--suite", "random"}).code, 2);
  EXPECT_EQ(run_json({"--seed", "5", "--count", "1", "verify", "--suite", "random"})["inputs"]["seed"], "5");
  ::unsetenv("ARTHUR_CALC_SEED");
  EXPECT_EQ(run_json({"--count", "1", "verify", "--suite", "random"})["inputs"]["seed"], "1");
}

TEST(Cli, ErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"dual"}).code, 2);
  EXPECT_EQ(run({"--format", "yaml", "classify", kSp2}).code, 2);
  EXPECT_EQ(run({"--count", "-3", "verify"}).code, 2);
  const Outcome bad = run({"classify", "Sp(2): chi[1,O]@S(1)xS(1)"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("dimension"), std::string::npos);
  EXPECT_EQ(run({"classify", "Sp(2) chi"}).code, 2);
  EXPECT_EQ(run({"dual", kSp2, "--char", "+,+,+"}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "random", "--name", "nope"}).code, 2);
}

TEST(Cli, HelpExitsZero) {
  const Outcome r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}
