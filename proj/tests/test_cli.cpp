#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

#ifndef ZSG_CLI_PATH
#define ZSG_CLI_PATH "zsg"
#endif

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  Run r;
  const std::string cmd = std::string(ZSG_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

nlohmann::json run_json(const std::string& args) {
  Run r = run(args);
  EXPECT_EQ(r.status, 0) << args;
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST(Cli, SolveDiscountedPennies) {
  auto j = run_json("solve-discounted --game pennies --lambda 1/2 --bits 3");
  EXPECT_EQ(j["schema"], "zsg-report/1");
  EXPECT_EQ(j["result"]["u"], "4");
  EXPECT_EQ(j["result"]["interval"][0], "4/2^3");
  EXPECT_EQ(j["result"]["interval"][1], "5/2^3");
  EXPECT_FALSE(j.contains("timing_ms"));
}

TEST(Cli, SolveDiscountedExact) {
  auto j = run_json("solve-discounted --game pennies --lambda 1/2 --bits 3 --exact");
  EXPECT_EQ(j["exact"]["text"], "2*z - 1");
  EXPECT_EQ(j["exact"]["interval"][0], "1/2^2");
  EXPECT_EQ(j["exact"]["interval"][1], "3/2^2");
  EXPECT_TRUE(j["exact"]["certified"].get<bool>());
}

TEST(Cli, SolveLimitFast) {
  auto j = run_json("solve-limit --game bigmatch --bits 8 --quiet");
  EXPECT_EQ(j["result"]["u"], "256");
}

TEST(Cli, LambdaThreshold) {
  auto j = run_json("lambda-threshold --game kohlberg --bits 1");
  EXPECT_EQ(j["exponent"], 119);
  EXPECT_EQ(j["raw_game"]["exponent"], 103);
  EXPECT_EQ(j["lambda"], "1/2^119");
}

TEST(Cli, MatrixGame) {
  auto j = run_json("matgame --matrix '1,0;0,1'");
  EXPECT_EQ(j["result"]["value"], "1/2");
  EXPECT_EQ(j["kernel"]["det_over_cofactor_sum"], "1/2");
}

TEST(Cli, OracleValueIteration) {
  auto j = run_json("oracle value-iteration --game pennies --lambda 1/2 --eps 2^-20");
  // 19 steps of u -> 1/4 + u/2 from 0
  EXPECT_EQ(j["result"]["values"][0], "524287/1048576");
  EXPECT_EQ(j["result"]["iterations"], 19);
}

TEST(Cli, CorpusAndTiming) {
  auto j = run_json("corpus list");
  EXPECT_EQ(j["instances"].size(), 5u);
  auto t = run_json("matgame --matrix '2' --timing");
  EXPECT_TRUE(t.contains("timing_ms"));
}

TEST(Cli, Reproducible) {
  const std::string args = "solve-discounted --game absorbing2 --lambda 1/4 --bits 12 --quiet";
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(run("solve-discounted --game nosuch --lambda 1/2 --bits 3").status, 2);
  EXPECT_EQ(run("solve-discounted --game pennies --lambda 3/2 --bits 3").status, 2);
  EXPECT_EQ(run("solve-discounted --game pennies --lambda x --bits 3").status, 2);
  EXPECT_EQ(run("solve-discounted --game pennies --lambda 1/2 --bits 3 --state 2").status, 2);
  EXPECT_EQ(run("matgame --matrix '1,2;3'").status, 2);
  EXPECT_EQ(run("bogus").status, 2);
}
