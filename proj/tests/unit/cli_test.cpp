#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "commands.hpp"

namespace sfvs::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class Cli : public ::testing::Test {
 protected:
  fs::path dir_;

  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / (std::string("sfvs_cli_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& body) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << body;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
};

const char* kTriangle = "p sfvs 3 3 1\ne 1 2\ne 2 3\ne 1 3\nt 1\n";
const char* kC4 = "p sfvs 4 4 1\ne 1 2\ne 2 3\ne 3 4\ne 4 1\nt 1\n";
// Vertex cover of C5 with budget 2, after the split reduction.
const char* kVcC5 =
    "p sfvs 10 20 2\n"
    "e 1 2\ne 1 3\ne 1 4\ne 1 5\ne 2 3\ne 2 4\ne 2 5\ne 3 4\ne 3 5\ne 4 5\n"
    "e 6 1\ne 6 2\ne 7 2\ne 7 3\ne 8 3\ne 8 4\ne 9 4\ne 9 5\ne 10 5\ne 10 1\n"
    "t 6\nt 7\nt 8\nt 9\nt 10\n";

TEST_F(Cli, SolveJson) {
  SolveArgs a;
  a.common.input = file("tri.txt", kTriangle);
  a.common.json = true;
  a.trace_path = path("trace.jsonl");
  std::ostringstream out;
  EXPECT_EQ(run_solve(a, out), kYes);
  const json j = json::parse(out.str());
  EXPECT_EQ(j["answer"], "yes");
  EXPECT_EQ(j["solution"].size(), 1u);
  for (const char* key : {"nodes_visited", "max_depth", "wall_ms"}) EXPECT_TRUE(j.contains(key)) << key;
  std::istringstream trace(slurp(a.trace_path));
  int lines = 0;
  for (std::string line; std::getline(trace, line); ++lines) EXPECT_TRUE(json::parse(line).contains("rule"));
  EXPECT_GE(lines, 1);
}

TEST_F(Cli, SolveTextAndBudgetOverride) {
  SolveArgs a;
  a.common.input = file("tri.txt", kTriangle);
  a.common.k = 0;
  std::ostringstream out;
  EXPECT_EQ(run_solve(a, out), kNo);
  EXPECT_EQ(out.str().rfind("NO k=0", 0), 0u);
}

TEST_F(Cli, KernelizeVcOfC5) {
  KernelizeArgs a;
  a.common.input = file("c5.txt", kVcC5);
  a.common.json = true;
  a.emit_kernel = path("kernel.txt");
  std::ostringstream out;
  const int code = run_kernelize(a, out);
  const json j = json::parse(out.str());
  if (j["outcome"] == "reduced") {
    EXPECT_EQ(code, kYes);
    EXPECT_LE(j["clique_side"].get<int>(), 10 * j["k"].get<int>());
  } else {
    EXPECT_EQ(j["outcome"], "trivial-no");
    EXPECT_EQ(code, kNo);
  }
  // The emitted kernel keeps the answer.
  SolveArgs s;
  s.common.input = a.emit_kernel;
  std::ostringstream solved;
  EXPECT_EQ(run_solve(s, solved), kNo);

  a.common.k = 5;
  a.common.json = false;
  std::ostringstream yes;
  EXPECT_EQ(run_kernelize(a, yes), kYes);
  EXPECT_EQ(run_solve(s, solved), kYes);
}

TEST_F(Cli, OracleAndExport) {
  OracleArgs a;
  a.common.input = file("tri.txt", kTriangle);
  a.export_3hs = path("tri.3hs");
  std::ostringstream out;
  EXPECT_EQ(run_oracle(a, out), kYes);
  EXPECT_EQ(slurp(a.export_3hs), "p 3hs 3 1 1\n1 2 3\n");
  a.max_n = 2;
  EXPECT_EQ(run_oracle(a, out), kRejected);
}

TEST_F(Cli, VerifyReportsWitnessCycle) {
  VerifyArgs a;
  a.common.input = file("tri.txt", kTriangle);
  a.common.json = true;
  a.set = "";
  std::ostringstream bad;
  EXPECT_EQ(run_verify(a, bad), kNo);
  const json j = json::parse(bad.str());
  EXPECT_FALSE(j["valid"]);
  EXPECT_EQ(j["witness_cycle"].size(), 3u);

  a.set = "2";
  std::ostringstream good;
  EXPECT_EQ(run_verify(a, good), kYes);
  EXPECT_TRUE(json::parse(good.str())["valid"]);

  a.set = "9";
  std::ostringstream missing;
  EXPECT_EQ(run_verify(a, missing), kUsage);
}

TEST_F(Cli, ExitCodesForBadInput) {
  SolveArgs a;
  a.common.input = file("bad.txt", "p sfvs 2 1 0\ne 1 5\n");
  a.common.json = true;
  std::ostringstream parse;
  EXPECT_EQ(run_solve(a, parse), kUsage);
  EXPECT_EQ(json::parse(parse.str())["error"], "parse");

  a.common.input = file("c4.txt", kC4);
  std::ostringstream structure;
  EXPECT_EQ(run_solve(a, structure), kRejected);
  const json j = json::parse(structure.str());
  EXPECT_EQ(j["error"], "structure");
  EXPECT_EQ(j["certificate"].size(), 4u);

  KernelizeArgs k;
  k.common.input = a.common.input;
  std::ostringstream not_split;
  EXPECT_EQ(run_kernelize(k, not_split), kRejected);

  a.common.input = path("absent.txt");
  std::ostringstream absent;
  EXPECT_EQ(run_solve(a, absent), kUsage);
}

TEST_F(Cli, GenIsDeterministic) {
  GenArgs a;
  a.spec.seed = 5;
  std::ostringstream first, second;
  EXPECT_EQ(run_gen(a, first), kYes);
  EXPECT_EQ(run_gen(a, second), kYes);
  EXPECT_EQ(first.str(), second.str());
  a.output = path("gen.txt");
  std::ostringstream quiet;
  EXPECT_EQ(run_gen(a, quiet), kYes);
  EXPECT_EQ(slurp(a.output), first.str());
  a.spec.p = 2.0;
  EXPECT_EQ(run_gen(a, quiet), kUsage);
}

TEST_F(Cli, BenchAppends) {
  BenchArgs a;
  a.count = 3;
  a.output = path("bench.csv");
  std::ostringstream out;
  EXPECT_EQ(run_bench(a, out), kYes);
  EXPECT_EQ(run_bench(a, out), kYes);
  std::istringstream csv(slurp(a.output));
  int lines = 0;
  for (std::string line; std::getline(csv, line);) ++lines;
  EXPECT_EQ(lines, 7);
  EXPECT_NE(out.str().find("3 rows appended"), std::string::npos);
}

}  // namespace
}  // namespace sfvs::cli
