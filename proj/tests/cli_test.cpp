#include "blockmod/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "process_runner.hpp"

namespace blockmod::cli {
namespace {

using Args = std::vector<std::string>;

Json parse_report(const CommandOutput& out) { return Json::parse(out.out); }

const Json& first_witness(const Json& report) { return report.at("checks").at(0).at("witness"); }

TEST(Cli, BracketExample) {
  const CommandOutput out = run({"bracket", "L(1,0)", "L(0,1)", "--q", "2"});
  EXPECT_EQ(out.exit_code, 0);
  EXPECT_NE(out.out.find("-3*L(1,1)"), std::string::npos);
  EXPECT_EQ(first_witness(parse_report(out)).at("result"), "-3*L(1,1)");
}

TEST(Cli, ClosureExample) {
  const CommandOutput out = run({"closure", "--seed", "1", "--D", "3", "--B", "5", "--q", "1", "--lambda", "1,1",
                                 "--alpha", "0"});
  EXPECT_EQ(out.exit_code, 0);
  const Json w = first_witness(parse_report(out));
  EXPECT_EQ(w.at("tag"), "FULL");
  EXPECT_EQ(w.at("dimension"), 10);
}

TEST(Cli, ClosureOmegaPrimeAddsCertificate) {
  const CommandOutput out = run({"closure", "--seed", "d1", "--seed", "d1*d2", "--D", "3", "--q", "1"});
  EXPECT_EQ(out.exit_code, 0);
  const Json r = parse_report(out);
  ASSERT_EQ(r.at("checks").size(), 2u);
  EXPECT_EQ(r.at("checks").at(0).at("witness").at("tag"), "OMEGA_PRIME");
  EXPECT_EQ(r.at("checks").at(0).at("witness").at("dimension"), 9);
  EXPECT_EQ(r.at("checks").at(1).at("name"), "omega_prime_certificate");
  EXPECT_EQ(r.at("checks").at(1).at("status"), "pass");
}

TEST(Cli, IsoExample) {
  const CommandOutput out = run({"iso", "--left", "1,1,0", "--right", "1,2,0", "--q", "1"});
  EXPECT_EQ(out.exit_code, 0);
  const Json w = first_witness(parse_report(out));
  EXPECT_EQ(w.at("isomorphic"), false);
  EXPECT_EQ(w.at("witness_index"), "(0,1)");
  const Json same = first_witness(parse_report(run({"iso", "--left", "1,1,0", "--right", "1,1,0"})));
  EXPECT_EQ(same.at("isomorphic"), true);
  EXPECT_TRUE(same.at("witness_index").is_null());
}

TEST(Cli, ReportFieldOrder) {
  const Json r = parse_report(run({"bracket", "L(1,0)", "D2"}));
  std::vector<std::string> keys;
  for (const auto& [k, v] : r.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"command", "config", "checks", "overall"}));
  keys.clear();
  for (const auto& [k, v] : r.at("config").items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"q", "lambda", "alpha", "D", "B", "rng_seed", "sweep_count"}));
  keys.clear();
  for (const auto& [k, v] : r.at("checks").at(0).items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"name", "paper_anchor", "status", "witness"}));
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({"frobnicate"}).exit_code, 2);
  EXPECT_NE(run({"frobnicate"}).err.find("unknown command"), std::string::npos);
  EXPECT_EQ(run({}).exit_code, 2);
  EXPECT_EQ(run({"bracket", "L(1,0)"}).exit_code, 2);
  EXPECT_EQ(run({"bracket", "L(1,0)", "L(0,1)", "--q", "0"}).exit_code, 2);
  EXPECT_EQ(run({"bracket", "L(1,0)", "L(0,1)", "--q", "1/0"}).exit_code, 2);
  EXPECT_EQ(run({"act", "L(1,0)", "d1^-1"}).exit_code, 2);
  EXPECT_EQ(run({"closure", "--seed", "d1^4", "--D", "3"}).exit_code, 2);
  EXPECT_EQ(run({"closure", "--seed", "d1", "--D", "0"}).exit_code, 2);
  EXPECT_EQ(run({"witt", "--m", "0,3"}).exit_code, 2);
  EXPECT_EQ(run({"iso", "--left", "0,1,0", "--right", "1,1,0"}).exit_code, 2);
  EXPECT_EQ(run({"replay", "nope"}).exit_code, 2);
  EXPECT_EQ(run({"replay", "--lambda", "1"}).exit_code, 2);
  EXPECT_EQ(run({"axioms", "--sweep-count", "0"}).exit_code, 2);
  EXPECT_EQ(run({"--help"}).exit_code, 0);
}

TEST(Cli, FailingCheckExitsOne) {
  // At q = 1, alpha = 1 the transposed form is a module, so the control fails.
  const CommandOutput out = run({"replay", "transposed", "--q", "1", "--alpha", "1"});
  EXPECT_EQ(out.exit_code, 1);
  EXPECT_EQ(parse_report(out).at("overall"), "fail");
}

TEST(Cli, ReplayAndWittPass) {
  EXPECT_EQ(run({"replay", "--q", "3/2", "--lambda", "2,-1/3", "--alpha", "1/2"}).exit_code, 0);
  const CommandOutput w = run({"witt", "--m", "-1,4", "--i-range", "-4,4", "--q", "5/7", "--alpha", "2"});
  EXPECT_EQ(w.exit_code, 0);
  EXPECT_EQ(first_witness(parse_report(w)).at("lambda_m"), "1");
}

TEST(Cli, AxiomsPass) {
  const CommandOutput out = run({"axioms", "--q", "-2", "--lambda", "3,1/2", "--alpha", "1/3", "--radius", "1"});
  EXPECT_EQ(out.exit_code, 0) << out.out << out.err;
}

TEST(Cli, ConfigFileWithFlagOverride) {
  const std::string path = ::testing::TempDir() + "blockmod_cli_test.cfg";
  {
    std::ofstream f(path);
    f << "# test\nq = 5/7\nlambda=2,3\nD=2\nrng_seed=9\n";
  }
  const Json r = parse_report(run({"closure", "--seed", "d1", "--config", path, "--D", "3"}));
  EXPECT_EQ(r.at("config").at("q"), "5/7");
  EXPECT_EQ(r.at("config").at("lambda"), Json::array({"2", "3"}));
  EXPECT_EQ(r.at("config").at("D"), 3);
  EXPECT_EQ(r.at("config").at("B"), 5);
  EXPECT_EQ(r.at("config").at("rng_seed"), 9);
  {
    std::ofstream f(path);
    f << "colour=blue\n";
  }
  EXPECT_EQ(run({"closure", "--seed", "d1", "--config", path}).exit_code, 2);
  std::remove(path.c_str());
  EXPECT_EQ(run({"closure", "--seed", "d1", "--config", path}).exit_code, 2);
}

TEST(Cli, DeterministicAcrossRuns) {
  const Args args{"replay", "--rng-seed", "7", "--q", "2", "--alpha", "1/3"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, RealBinaryMatchesInProcess) {
  const std::string exe = BLOCKMOD_CLI_PATH;
  for (const Args& args : {Args{"bracket", "L(1,0)", "L(0,1)", "--q", "2"},
                           Args{"closure", "--seed", "1", "--D", "3", "--B", "5", "--q", "1", "--lambda", "1,1",
                                "--alpha", "0"},
                           Args{"iso", "--left", "1,1,0", "--right", "1,2,0", "--q", "1"}, Args{"frobnicate"}}) {
    const CommandOutput a = test_support::run_process(exe, args);
    const CommandOutput b = run(args);
    EXPECT_EQ(a.exit_code, b.exit_code);
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, EndToEndCheckPassesInProcessAndForBinary) {
  EXPECT_TRUE(cli_end_to_end(run).passed());
  EXPECT_TRUE(cli_end_to_end(test_support::process_runner(BLOCKMOD_CLI_PATH)).passed());
}

}  // namespace
}  // namespace blockmod::cli
