#include "bbspan/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "bbspan/io.hpp"

namespace bbspan {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const CliHooks& hooks = {}) {
  args.insert(args.begin(), "bbspan");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err, hooks);
  return {code, out.str(), err.str()};
}

const std::string kBezier = "3 1: 0 0 0 0 1 1 1 1";
const std::string kUniform = "3 7: -3 -2 -1 0 1 2 3 4 5 6 7 8 9 10";

TEST(CliTest, ValidateAcceptsAndRejects) {
  const auto ok = run({"validate", "--inline", kUniform});
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out, "valid: degree 3, 7 spans, 7 non-empty\n");
  const auto bad = run({"validate", "--inline", "2 3: 0 0 0 2 1 3 3 3"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("NotNondecreasing"), std::string::npos);
  EXPECT_EQ(run({"validate", "--inline", kUniform, "--degree", "2"}).code, 1);
}

TEST(CliTest, ConvertBezierCsvIsIdentity) {
  const auto r = run({"convert", "--inline", kBezier, "--span", "0", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "k,i=-3,i=-2,i=-1,i=0\n0,1,0,0,0\n1,0,1,0,0\n2,0,0,1,0\n3,0,0,0,1\n");
}

TEST(CliTest, ConvertMethodsAgree) {
  const auto fast = run({"convert", "--inline", kUniform, "--at", "3.5", "--format", "json"});
  const auto slow =
      run({"convert", "--inline", kUniform, "--span", "3", "--method", "deboor", "--format", "json"});
  ASSERT_EQ(fast.code, 0);
  ASSERT_EQ(slow.code, 0);
  const auto a = table_from_json(fast.out);
  const auto b = table_from_json(slow.out);
  EXPECT_EQ(a.span().value, 3);
  EXPECT_LE((a.matrix() - b.matrix()).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_NEAR(a(0, 0), 1.0 / 6.0, 1e-15);
}

TEST(CliTest, ConvertExactPrintsFractions) {
  const auto r = run({"convert", "--inline", kUniform, "--span", "3", "--method", "exact", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "k,i=0,i=1,i=2,i=3\n0,1/6,2/3,1/6,0\n1,0,2/3,1/3,0\n2,0,1/3,2/3,0\n3,0,1/6,2/3,1/6\n");
}

TEST(CliTest, ConvertIsByteIdenticalAcrossRuns) {
  const std::vector<std::string> args = {"convert", "--inline", kUniform, "--span", "4", "--format", "json"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(CliTest, ConvertErrorCodes) {
  const std::string repeated = "2 4: 0 0 0 1 1 2 3 3 3";
  const auto empty = run({"convert", "--inline", repeated, "--span", "1"});
  EXPECT_EQ(empty.code, 2);
  EXPECT_NE(empty.err.find("EmptySpan"), std::string::npos);
  EXPECT_EQ(run({"convert", "--inline", repeated, "--span", "9"}).code, 1);
  EXPECT_EQ(run({"convert", "--inline", repeated}).code, 1);
  EXPECT_EQ(run({"convert", "--inline", repeated, "--span", "0", "--method", "fast"}).code, 1);
  EXPECT_EQ(run({"convert", "--inline", repeated, "--span", "0", "--at", "0.5"}).code, 1);
}

TEST(CliTest, ReadsKnotFileAndWritesOutput) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto knots = dir / "bbspan_cli_test_knots.json";
  const auto table = dir / "bbspan_cli_test_table.json";
  {
    std::ofstream out(knots);
    out << R"({"degree": 2, "spans": 3, "knots": [0, 0, 0, 1, 3, 4, 4, 4]})";
  }
  const auto r = run({"convert", "--knots", knots.string(), "--span", "1", "--format", "json", "--out",
                      table.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(table);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_NEAR(table_from_json(ss.str())(0, -1), 2.0 / 3.0, 1e-15);
  std::filesystem::remove(knots);
  std::filesystem::remove(table);
  EXPECT_EQ(run({"convert", "--knots", knots.string(), "--span", "1"}).code, 1);
}

TEST(CliTest, EvalMatchesBasisValue) {
  const auto r = run({"eval", "--inline", kBezier, "-i", "-3", "--at", "0.5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0.125\n");
  const auto exact = run({"eval", "--inline", kUniform, "--function", "0", "--at", "3", "--method", "exact"});
  EXPECT_EQ(exact.out, "1/6\n");
  EXPECT_EQ(run({"eval", "--inline", kBezier, "-i", "0", "--at", "2"}).code, 1);
}

TEST(CliTest, VerifyPassesAndFailsWithHook) {
  const auto ok = run({"verify", "--inline", kUniform});
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("all checks passed"), std::string::npos);
  CliHooks hooks;
  hooks.tamper = [](SpanIndex, RowMajorMatrix<double>& b) { b(0, 0) += 0.25; };
  const auto bad = run({"verify", "--inline", kUniform}, hooks);
  EXPECT_EQ(bad.code, 3);
  EXPECT_NE(bad.out.find("FAIL"), std::string::npos);
}

TEST(CliTest, AccuracyReportHasOneRowPerCell) {
  const auto r = run({"accuracy", "--ms", "3,4,5", "--ns", "10", "--trials", "5", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("m,n,metric,value\n", 0), 0U);
  for (const char* cell : {"3,10,digits_new,", "4,10,digits_new,", "5,10,digits_new,"}) {
    EXPECT_NE(r.out.find(cell), std::string::npos) << cell;
  }
}

TEST(CliTest, BenchWritesFiles) {
  const auto prefix = (std::filesystem::temp_directory_path() / "bbspan_cli_test_bench").string();
  const auto r = run({"bench", "--ms", "3,5", "--ns", "10", "--trials", "3", "--reps", "1", "--out", prefix});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("ratio"), std::string::npos);
  EXPECT_TRUE(std::filesystem::exists(prefix + ".csv"));
  EXPECT_TRUE(std::filesystem::exists(prefix + ".txt"));
  std::filesystem::remove(prefix + ".csv");
  std::filesystem::remove(prefix + ".txt");
}

TEST(CliTest, ExperimentArgumentErrors) {
  EXPECT_EQ(run({"bench", "--ms", "3", "--ns", "10", "--trials", "0"}).code, 1);
  EXPECT_EQ(run({"accuracy", "--ms", "0", "--ns", "10", "--trials", "2"}).code, 1);
  EXPECT_EQ(run({"accuracy", "--ms", "3,x", "--ns", "10"}).code, 1);
  EXPECT_EQ(run({"accuracy", "--ns", "10"}).code, 1);
}

TEST(CliTest, SubcommandIsRequired) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

}  // namespace
}  // namespace bbspan
