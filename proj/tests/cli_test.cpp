#include "symcirc/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"

namespace symcirc {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("symcirc_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  static void spit(const std::string& p, const std::string& text) { std::ofstream(p) << text; }

  fs::path dir_;
};

TEST_F(CliTest, SynthToStdoutWritesNetlistAndReport) {
  CliRun r = run({"synth", "--fn", "majority", "--n", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("SYMCIRC 1\nINPUTS 3\n", 0), 0u);
  EXPECT_NE(r.err.find("csa_count=1\n"), std::string::npos);
}

TEST_F(CliTest, SynthToFilePrintsReport) {
  CliRun r = run({"synth", "--fn", "exact:5", "--n", "10", "--out", path("c.net")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("csa_count=8\n"), std::string::npos);
  EXPECT_NE(r.out.find("size="), std::string::npos);
  EXPECT_NE(r.out.find("depth="), std::string::npos);
  EXPECT_NE(r.out.find("popcount_size="), std::string::npos);
  EXPECT_EQ(slurp(path("c.net")).rfind("SYMCIRC 1\nINPUTS 10\n", 0), 0u);
}

TEST_F(CliTest, SynthIsByteIdenticalAcrossRuns) {
  CliRun a = run({"synth", "--fn", "mod:3,1", "--n", "37"});
  CliRun b = run({"synth", "--fn", "mod:3,1", "--n", "37"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.err, b.err);
}

TEST_F(CliTest, SynthFromSpectrumFile) {
  spit(path("s.txt"), "4\n1 0 0 1 1\n");
  CliRun r = run({"synth", "--spectrum-file", path("s.txt"), "--out", path("c.net")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(run({"eval", path("c.net"), "0000"}).out, "1\n");
  EXPECT_EQ(run({"eval", path("c.net"), "0100"}).out, "0\n");
  EXPECT_EQ(run({"eval", path("c.net"), "1101"}).out, "1\n");
}

TEST_F(CliTest, SynthUsageErrors) {
  spit(path("bad.txt"), "3\n0 1 x 1\n");
  CliRun r = run({"synth", "--spectrum-file", path("bad.txt")});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
  EXPECT_EQ(run({"synth", "--fn", "majority"}).code, 2);
  EXPECT_EQ(run({"synth", "--fn", "nope", "--n", "3"}).code, 2);
  EXPECT_EQ(run({"synth", "--fn", "threshold:9", "--n", "3"}).code, 2);
  EXPECT_EQ(run({"synth", "--fn", "parity", "--spectrum-file", path("bad.txt"), "--n", "3"}).code, 2);
  EXPECT_EQ(run({"synth", "--spectrum-file", path("missing.txt")}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST_F(CliTest, Eval) {
  ASSERT_EQ(run({"synth", "--fn", "majority", "--n", "3", "--out", path("maj.net")}).code, 0);
  CliRun r = run({"eval", path("maj.net"), "110"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1\n");
  EXPECT_EQ(run({"eval", path("maj.net"), "11"}).code, 2);
  EXPECT_EQ(run({"eval", path("maj.net"), "1a0"}).code, 2);

  ASSERT_EQ(run({"synth", "--fn", "parity", "--n", "4", "--out", path("par.net")}).code, 0);
  EXPECT_EQ(run({"eval", path("par.net"), "1011"}).out, "1\n");
  EXPECT_EQ(run({"eval", path("par.net"), "1001"}).out, "0\n");
}

TEST_F(CliTest, CheckPassesOnFreshCircuit) {
  ASSERT_EQ(run({"synth", "--fn", "majority", "--n", "9", "--out", path("c.net")}).code, 0);
  CliRun r = run({"check", path("c.net"), "--fn", "majority", "--exhaustive"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "ok mode=exhaustive trials=512\n");
  r = run({"check", path("c.net"), "--fn", "majority", "--n", "9", "--trials", "500", "--seed", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "ok mode=randomized trials=500\n");
}

TEST_F(CliTest, CheckReportsMutation) {
  ASSERT_EQ(run({"synth", "--fn", "majority", "--n", "6", "--out", path("c.net")}).code, 0);
  std::string text = slurp(path("c.net"));
  const auto pos = text.find(" AND ");
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, 5, " OR ");
  spit(path("m.net"), text);
  CliRun r = run({"check", path("m.net"), "--fn", "majority", "--exhaustive"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out.rfind("mismatch", 0), 0u);
  EXPECT_NE(r.out.find("assignment="), std::string::npos);
}

TEST_F(CliTest, CheckUsageErrors) {
  EXPECT_EQ(run({"check", "--exhaustive", "--n", "30"}).code, 2);
  ASSERT_EQ(run({"synth", "--fn", "parity", "--n", "5", "--out", path("c.net")}).code, 0);
  EXPECT_EQ(run({"check", path("c.net"), "--fn", "parity", "--n", "30", "--exhaustive"}).code, 2);
  EXPECT_EQ(run({"check", path("c.net"), "--fn", "parity", "--n", "6"}).code, 2);
  EXPECT_EQ(run({"check", path("c.net")}).code, 2);
  EXPECT_EQ(run({"check", path("c.net"), "--fn", "parity", "--trials", "0"}).code, 2);
  spit(path("broken.net"), "SYMCIRC 1\nINPUTS 2\nG 0 AND I0\nOUTPUTS 0\n");
  CliRun r = run({"check", path("broken.net"), "--fn", "parity"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 3"), std::string::npos);
}

TEST_F(CliTest, Bench) {
  CliRun r = run({"bench", "--fn", "parity", "--ns", "8,16,32"});
  EXPECT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "n,size,depth,size_per_n,depth_per_logn,csa_count");
  std::vector<std::string> csa;
  while (std::getline(lines, line)) csa.push_back(line.substr(line.rfind(',') + 1));
  EXPECT_EQ(csa, (std::vector<std::string>{"6", "14", "30"}));

  r = run({"bench", "--fn", "majority", "--ns", "1024", "--out", path("b.csv")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(slurp(path("b.csv")).rfind("n,size,depth,size_per_n,depth_per_logn,csa_count\n1024,", 0), 0u);

  EXPECT_EQ(run({"bench", "--fn", "parity", "--ns", ""}).code, 2);
  EXPECT_EQ(run({"bench", "--fn", "parity"}).code, 2);
  EXPECT_EQ(run({"bench", "--fn", "parity", "--ns", "2"}).code, 2);
  EXPECT_EQ(run({"bench", "--fn", "parity", "--ns", "8,x"}).code, 2);
  EXPECT_EQ(run({"bench", "--ns", "8"}).code, 2);
}

TEST_F(CliTest, ExportSpectrum) {
  CliRun r = run({"export-spectrum", "--fn", "threshold:2", "--n", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "3\n0 0 1 1\n");
  EXPECT_EQ(run({"export-spectrum", "--fn", "threshold:2"}).code, 2);
}

TEST_F(CliTest, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }

}  // namespace
}  // namespace symcirc
