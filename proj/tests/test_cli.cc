#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.h"

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = xyz::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST(Cli, Construct) {
  const CliResult r = run({"construct", "--a", "5", "--b", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["N"], 17);
  EXPECT_EQ(j["k"], 1);
  EXPECT_EQ(j["k_rank"], 1);
  EXPECT_EQ(j["repetition"]["X"], true);
  EXPECT_EQ(j["repetition"]["Y"], true);
  EXPECT_EQ(j["repetition"]["Z"], true);

  const auto k3 = nlohmann::json::parse(run({"construct", "--a", "2", "--b", "2"}).out);
  EXPECT_EQ(k3["k"], 3);
  EXPECT_EQ(k3["repetition"], "inapplicable");
  EXPECT_EQ(nlohmann::json::parse(run({"construct", "--a", "0", "--b", "0"}).out)["generator"], "XZYIYZX");
}

TEST(Cli, Dimension) {
  const CliResult r = run({"dimension", "--a", "0:2", "--b", "2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("a,b,n,k,k_rank\n"), std::string::npos);
  EXPECT_NE(r.out.find("2,2,15,3,3\n"), std::string::npos);
}

TEST(Cli, DistanceWithExactConfirmation) {
  const CliResult r = run({"distance", "--a", "5", "--b", "0", "--trials", "50", "--seed", "3", "--exact", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["d_x_up"], 5);
  EXPECT_EQ(j["d_z_up"], 5);
  EXPECT_EQ(j["d_y_up"], 5);
  EXPECT_EQ(j["exact"]["distance"], 5);
  EXPECT_EQ(j["trials"], 50);
  EXPECT_EQ(j["seed"], 3);
  EXPECT_EQ(run({"distance", "--a", "5", "--b", "0", "--trials", "0"}).code, 2);
}

TEST(Cli, DistanceOnXWitnessFamilyCode) {
  const CliResult r = run({"distance", "--a", "10", "--b", "3", "--trials", "100"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["d_x_up"], 3);
}

TEST(Cli, Witness) {
  const auto x = nlohmann::json::parse(run({"witness", "--type", "X", "--b", "0", "--l", "1"}).out);
  EXPECT_EQ(x["label"], "IIXIIIIXIIIIXII");
  EXPECT_EQ(x["is_logical"], true);
  const auto y = nlohmann::json::parse(run({"witness", "--type", "Y", "--a", "20", "--b", "3"}).out);
  EXPECT_EQ(y["weight"], 11);
  EXPECT_EQ(y["is_logical"], true);
  const CliResult bad = run({"witness", "--type", "X", "--b", "1", "--l", "1"});
  EXPECT_EQ(bad.code, 3);
  EXPECT_EQ(nlohmann::json::parse(bad.err)["error"], "precondition");
}

TEST(Cli, Table1EmptyRangeIsHeaderOnly) {
  const CliResult r = run({"table1", "--b-min", "1", "--b-max", "0"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "# xyzcyclic table1 schema v1\nb,a,n,d_x,d_z,d_y\n");
}

TEST(Cli, Table1FirstRow) {
  const CliResult r = run({"table1", "--b-min", "0", "--b-max", "0", "--trials", "200"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\n0,5,17,5,5,5\n"), std::string::npos);
}

TEST(Cli, Overhead) {
  const CliResult r = run({"overhead", "--d", "5,7"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "# xyzcyclic overhead schema v1\nd,xyz_n,xzzx_n\n5,17,25\n7,25,49\n");
  const CliResult even = run({"overhead", "--d", "4"});
  EXPECT_NE(even.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(even.err).contains("error"));
}

TEST(Cli, Oracle) {
  const auto j = nlohmann::json::parse(run({"oracle", "--a", "5", "--b", "0", "--w-max", "5"}).out);
  EXPECT_EQ(j["min_weight"], 5);
  const auto none = nlohmann::json::parse(run({"oracle", "--a", "5", "--b", "0", "--w-max", "3"}).out);
  EXPECT_TRUE(none["min_weight"].is_null());
  const CliResult refused = run({"oracle", "--a", "20", "--b", "3", "--w-max", "11"});
  EXPECT_EQ(refused.code, 4);
  EXPECT_EQ(nlohmann::json::parse(refused.err)["error"], "budget");
}

TEST(Cli, SweepIsDeterministic) {
  const std::string cfg = write_temp("sweep.cfg",
                                     "# pure Z campaign\n"
                                     "codes = 5:0, 8:1\n"
                                     "noise = pure_Z\n"
                                     "p = 0.3, 0.45\n"
                                     "trials = 300\n"
                                     "seed = 11\n"
                                     "osd_order = 1\n");
  const CliResult a = run({"sweep", "--config", cfg});
  const CliResult b = run({"sweep", "--config", cfg});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  std::istringstream is(a.out);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(is, line)) lines.push_back(line);
  ASSERT_EQ(lines.size(), 6u);
  EXPECT_EQ(lines[1], "a,b,n,noise_kind,eta,p,trials,failures,p_logical,stderr,seed");
  EXPECT_EQ(lines[2].rfind("5,0,17,pure_Z,inf,0.3,300,", 0), 0u);
  EXPECT_EQ(lines[5].rfind("8,1,25,pure_Z,inf,0.45,300,", 0), 0u);

  const std::string out_path = ::testing::TempDir() + "sweep.csv";
  ASSERT_EQ(run({"--out", out_path, "sweep", "--config", cfg}).code, 0);
  std::ifstream f(out_path);
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_EQ(ss.str(), a.out);
}

TEST(Cli, SweepRejectsBadConfigs) {
  const CliResult zero = run({"sweep", "--config", write_temp("zero.cfg", "codes = 5:0\np = 0.1\ntrials = 0\n")});
  EXPECT_EQ(zero.code, 2);
  EXPECT_EQ(nlohmann::json::parse(zero.err)["error"], "usage");
  EXPECT_EQ(run({"sweep", "--config", write_temp("key.cfg", "codes = 5:0\np = 0.1\ntrials = 5\ncolour = red\n")}).code,
            2);
  EXPECT_EQ(run({"sweep", "--config", "/nonexistent/file.cfg"}).code, 2);
  EXPECT_THROW(xyz::cli::parse_campaign("codes = 5\np = 0.1\ntrials = 1\n"), std::invalid_argument);
  const auto c = xyz::cli::parse_campaign("codes=5:0\nnoise=z_biased\neta=1000\np=0.1,0.2\ntrials=7\nschedule=serial\n");
  EXPECT_EQ(c.codes.size(), 1u);
  EXPECT_EQ(c.p_grid.size(), 2u);
  EXPECT_EQ(c.trials, 7u);
  EXPECT_EQ(c.decoder.schedule, xyz::BpSchedule::Serial);
  const auto commented = xyz::cli::parse_campaign("codes = 5:0  # smallest\np = 0.1\ntrials = 3 # quick\n");
  EXPECT_EQ(commented.trials, 3u);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"construct", "--a", "-1", "--b", "0"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  const CliResult help = run({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("table1"), std::string::npos);
}
