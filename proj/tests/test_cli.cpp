#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "support/rhyme.hpp"

namespace mis::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("mis_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string rhyme_index() {
    const auto doc = write("rhyme.txt", mis::testing::kRhyme);
    const auto r = run_cli({"index", doc, "-o", path("idx.jsonl")});
    EXPECT_EQ(r.code, kExitOk) << r.err;
    return path("idx.jsonl");
  }

  fs::path dir_;
};

TEST_F(CliTest, EnumCount) {
  EXPECT_EQ(run_cli({"enum", "--n", "4", "--count"}).out, "43\n");
  EXPECT_EQ(run_cli({"enum", "--n", "10"}).out, "58787\n");
  EXPECT_EQ(run_cli({"enum", "--n", "0"}).out, "2\n");
}

TEST_F(CliTest, EnumListLevelsWidth) {
  EXPECT_EQ(run_cli({"enum", "--n", "2", "--list"}).out,
            "0\n{[0..0]}\n{[0..0], [1..1]}\n{[0..1]}\n{[1..1]}\n{∅}\n");
  EXPECT_EQ(run_cli({"enum", "--n", "2", "--levels"}).out, "0:1\n1:1\n2:2\n3:1\n4:1\n");
  EXPECT_EQ(run_cli({"enum", "--n", "5", "--width"}).out, "17\n");
}

TEST_F(CliTest, EnumUsageErrors) {
  auto r = run_cli({"enum", "--n", "3", "--count", "--list"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
  EXPECT_EQ(run_cli({"enum"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"enum", "--n", "x"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"enum", "--n", "-1"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"enum", "--n", "40"}).code, kExitFailure);
  EXPECT_EQ(run_cli({"enum", "--n", "12", "--levels"}).code, kExitFailure);
}

TEST_F(CliTest, TopLevelUsage) {
  EXPECT_EQ(run_cli({}).code, kExitUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kExitUsage);
  const auto help = run_cli({"--help"});
  EXPECT_EQ(help.code, kExitOk);
  EXPECT_NE(help.out.find("query"), std::string::npos);
}

TEST_F(CliTest, QueryRhyme) {
  const auto idx = rhyme_index();
  const auto r = run_cli({"query", idx, "--q", "pease AND porridge AND (hot OR cold)", "--snippets",
                          "3", "--score"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "rhyme.txt\t3.5400\t[0..2] [3..5] [31..33]\n");
  EXPECT_EQ(run_cli({"query", idx, "--q", "hot", "--score"}).out, "rhyme.txt\t3.0000\n");
  EXPECT_EQ(run_cli({"query", idx, "--q", "hot"}).out, "rhyme.txt\n");
  EXPECT_EQ(run_cli({"query", idx, "--q", "zzz", "--score"}).out, "");
}

TEST_F(CliTest, QueryRanksAndFilters) {
  write("a.txt", "hot and cold");
  write("b.txt", "hot cold hot");
  ASSERT_EQ(run_cli({"index", path("a.txt"), path("b.txt"), "-o", path("i.jsonl")}).code, kExitOk);
  EXPECT_EQ(run_cli({"query", path("i.jsonl"), "--q", "hot AND cold", "--score"}).out,
            "b.txt\t1.0000\na.txt\t0.3333\n");
  EXPECT_EQ(run_cli({"query", path("i.jsonl"), "--q", "hot AND cold", "--score", "--doc", "a.txt"}).out,
            "a.txt\t0.3333\n");
  EXPECT_EQ(run_cli({"query", path("i.jsonl"), "--q", "hot", "--doc", "c.txt"}).code, kExitFailure);
}

TEST_F(CliTest, QueryErrors) {
  const auto idx = rhyme_index();
  const auto bad = run_cli({"query", idx, "--q", "hot AND"});
  EXPECT_EQ(bad.code, kExitFailure);
  EXPECT_NE(bad.err.find("position 7"), std::string::npos);
  EXPECT_EQ(run_cli({"query", path("missing.jsonl"), "--q", "hot"}).code, kExitFailure);
  EXPECT_EQ(run_cli({"query", idx}).code, kExitUsage);
  write("broken.jsonl", "{\"doc\": 1}\n");
  EXPECT_EQ(run_cli({"query", path("broken.jsonl"), "--q", "hot"}).code, kExitFailure);
}

TEST_F(CliTest, IndexErrors) {
  EXPECT_EQ(run_cli({"index", path("nope.txt"), "-o", path("x.jsonl")}).code, kExitFailure);
  EXPECT_EQ(run_cli({"index", path("nope.txt")}).code, kExitUsage);
  fs::create_directories(dir_ / "sub");
  write("a.txt", "x");
  write("sub/a.txt", "y");
  EXPECT_EQ(run_cli({"index", path("a.txt"), path("sub/a.txt"), "-o", path("x.jsonl")}).code,
            kExitFailure);
}

TEST_F(CliTest, IndexFileFormat) {
  rhyme_index();
  std::ifstream in(path("idx.jsonl"));
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line.rfind("{\"doc\":\"rhyme.txt\",\"length\":37,\"postings\":{", 0), 0u);
  EXPECT_NE(line.find("\"hot\":[2,17,33]"), std::string::npos);
}

TEST_F(CliTest, Check) {
  const auto r = run_cli({"check", "--n", "4", "--ops", "all"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("leq: pass (1849 cases, 0 mismatches)"), std::string::npos);
  EXPECT_NE(r.out.find("crit: pass (43 cases, 0 mismatches)"), std::string::npos);
  EXPECT_EQ(r.out.substr(r.out.size() - 3), "OK\n");
  const auto sampled = run_cli({"check", "--n", "6", "--ops", "join,meet", "--samples", "500"});
  EXPECT_EQ(sampled.out, "join: pass (500 cases, 0 mismatches)\nmeet: pass (500 cases, 0 mismatches)\nOK\n");
  EXPECT_EQ(run_cli({"check", "--ops", "leq,frob"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"check", "--n", "0"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"check", "--n", "11", "--ops", "implies"}).code, kExitFailure);
}

TEST_F(CliTest, DeterministicOutput) {
  const auto a = run_cli({"enum", "--n", "4", "--list"});
  const auto b = run_cli({"enum", "--n", "4", "--list"});
  EXPECT_EQ(a.out, b.out);
}

TEST_F(CliTest, BinaryExitCodes) {
  const std::string bin = MIS_CLI_PATH;
  auto status = [&](const std::string& args) {
    const int raw = std::system((bin + " " + args + " > " + path("o.txt") + " 2>&1").c_str());
    return WEXITSTATUS(raw);
  };
  EXPECT_EQ(status("enum --n 3"), 0);
  EXPECT_EQ(status("enum --n nope"), 1);
  EXPECT_EQ(status("enum --n 50"), 2);
  std::ifstream in(path("o.txt"));
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_NE(text.find("error:"), std::string::npos);
}

}  // namespace
}  // namespace mis::cli
