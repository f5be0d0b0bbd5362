#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "sccpref/apx.hpp"

namespace sccpref {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           (std::string("sccpref_cli_") + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& content) {
    auto p = dir_ / name;
    std::ofstream(p, std::ios::binary) << content;
    return p.string();
  }

  static std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  int run(std::vector<std::string> args) {
    args.insert(args.begin(), "sccpref");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    out_.str("");
    err_.str("");
    return cli::run(static_cast<int>(argv.size()), argv.data(), out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, SolvePair) {
  auto in = file("pair.apx", "arg(a).\narg(b).\natt(a,b).\natt(b,a).\n");
  EXPECT_EQ(run({"solve", "-i", in, "--workers", "4"}), 0);
  EXPECT_EQ(out_.str(), "EXTENSIONS: 2\n[a]\n[b]\n");
  EXPECT_EQ(run({"solve", "--input", in, "--greedy", "--timeout-secs", "900", "--format", "apx"}), 0);
  EXPECT_EQ(out_.str(), "EXTENSIONS: 2\n[a]\n[b]\n");
}

TEST_F(CliTest, SolveToFileWithRecords) {
  auto in = file("four.apx", "arg(a).arg(b).arg(c).arg(d).att(a,b).att(b,a).att(a,c).att(b,c).att(c,d).\n");
  auto out = (dir_ / "ext.txt").string();
  auto rec = (dir_ / "runs.csv").string();
  EXPECT_EQ(run({"solve", "-i", in, "--output", out, "--records", rec}), 0);
  EXPECT_EQ(run({"solve", "-i", in, "--output", out, "--records", rec, "--workers", "2", "--greedy"}), 0);
  EXPECT_EQ(slurp(out), "EXTENSIONS: 2\n[a,d]\n[b,d]\n");
  std::istringstream csv(slurp(rec));
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(csv, line)) lines.push_back(line);
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[0], "instance,config,status,seconds,extensions");
  EXPECT_EQ(lines[1].rfind("four.apx,P1,success,", 0), 0u);
  EXPECT_EQ(lines[2].rfind("four.apx,P2G,success,", 0), 0u);
  EXPECT_EQ(lines[2].back(), '2');
}

TEST_F(CliTest, ParseErrorsExitWithTwo) {
  auto bad = file("bad.apx", "arg(a).\natt(a,b).\n");
  EXPECT_EQ(run({"solve", "-i", bad}), 2);
  EXPECT_NE(err_.str().find("line 2"), std::string::npos);
  EXPECT_EQ(out_.str(), "");
  EXPECT_EQ(run({"solve", "-i", (dir_ / "missing.apx").string()}), 2);
  EXPECT_EQ(run({"solve"}), 2);
  EXPECT_EQ(run({"solve", "-i", bad, "--format", "tgf"}), 2);
  EXPECT_EQ(run({"frobnicate"}), 2);
}

TEST_F(CliTest, TimeoutExitsWithThreeAndPrintsNothing) {
  auto in = file("pair.apx", "arg(a).arg(b).att(a,b).att(b,a).\n");
  auto rec = (dir_ / "runs.csv").string();
  EXPECT_EQ(run({"solve", "-i", in, "--timeout-secs", "1e-9", "--records", rec}), 3);
  EXPECT_EQ(out_.str(), "");
  EXPECT_NE(slurp(rec).find("pair.apx,P1,timeout,"), std::string::npos);
}

TEST_F(CliTest, GroundedAndDimacs) {
  auto in = file("chain.apx", "arg(a).arg(b).arg(c).att(a,b).att(b,c).\n");
  auto cnf = (dir_ / "chain.cnf").string();
  EXPECT_EQ(run({"solve", "-i", in, "--grounded", "--dump-cnf", cnf}), 0);
  EXPECT_EQ(out_.str(), "EXTENSIONS: 1\n[a,c]\n");
  EXPECT_EQ(slurp(cnf).rfind("p cnf 9 ", 0), 0u);
}

TEST_F(CliTest, GenAndRegenerate) {
  auto first = (dir_ / "first").string();
  auto second = (dir_ / "second").string();
  EXPECT_EQ(run({"gen", "--scc-count", "3,5", "--args-min", "1", "--args-max", "4", "--p-intra", "0.3",
                 "--p-inter", "0.1,0", "--seed", "9", "--count", "4", "--out", first}),
            0);
  EXPECT_TRUE(fs::exists(fs::path(first) / "af_0003.apx"));
  EXPECT_EQ(run({"gen", "--manifest", (fs::path(first) / "manifest.txt").string(), "--out", second}), 0);
  for (const auto& e : fs::directory_iterator(first)) {
    EXPECT_EQ(slurp(e.path()), slurp(fs::path(second) / e.path().filename())) << e.path();
  }
  auto af = read_apx_file(fs::path(first) / "af_0001.apx");
  EXPECT_GE(af.size(), 5u);
}

TEST_F(CliTest, GenRejectsBadParameters) {
  EXPECT_EQ(run({"gen", "--args-min", "3", "--args-max", "2", "--out", (dir_ / "x").string()}), 2);
  EXPECT_EQ(run({"gen", "--p-intra", "2", "--out", (dir_ / "x").string()}), 2);
  EXPECT_EQ(run({"gen", "--count", "1"}), 2);
}

TEST_F(CliTest, Bench) {
  auto corpus = dir_ / "corpus";
  ASSERT_EQ(run({"gen", "--scc-count", "4", "--args-max", "3", "--p-intra", "0.5", "--count", "2", "--out",
                 corpus.string()}),
            0);
  auto rec = (dir_ / "bench.csv").string();
  EXPECT_EQ(run({"bench", "--corpus", corpus.string(), "--configs", "P1,P2G", "--records", rec}), 0);
  EXPECT_NE(out_.str().find("P2G"), std::string::npos);
  std::istringstream csv(slurp(rec));
  std::string line;
  int rows = 0;
  while (std::getline(csv, line)) ++rows;
  EXPECT_EQ(rows, 5);
  EXPECT_EQ(run({"bench", "--corpus", (dir_ / "nothing").string()}), 2);
  EXPECT_EQ(run({"bench", "--corpus", corpus.string(), "--configs", "P0"}), 2);
}

}  // namespace
}  // namespace sccpref
