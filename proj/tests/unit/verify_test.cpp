#include "bbspan/verify.hpp"

#include <gtest/gtest.h>

#include <random>

#include "support/random_knots.hpp"

namespace bbspan {
namespace {

KnotVector bezier_knots(int m) {
  std::vector<double> v(static_cast<std::size_t>(m + 1), 0.0);
  v.resize(static_cast<std::size_t>(2 * m + 2), 1.0);
  return validate(m, 1, std::move(v));
}

const CheckResult& find(const VerifyReport& r, const std::string& name) {
  for (const auto& c : r.checks) {
    if (c.name == name) return c;
  }
  throw std::runtime_error("no check " + name);
}

TEST(VerifyTest, BezierKnotsPassWithoutDeviation) {
  const auto report = verify_knots(bezier_knots(4));
  EXPECT_TRUE(report.all_passed());
  for (const char* name : {"partition of unity", "new vs de Boor (float)", "new vs de Boor (exact)",
                           "nonnegativity", "boundary sparsity"}) {
    EXPECT_EQ(find(report, name).max_deviation, 0.0) << name;
  }
}

TEST(VerifyTest, RandomKnotsPass) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    const auto kv = testing::random_float_knots(rng, 1 + trial % 10, 5);
    const auto report = verify_knots(kv);
    ASSERT_TRUE(report.all_passed()) << report_text(report);
  }
}

TEST(VerifyTest, TamperedTableFails) {
  const auto kv = validate(3, 4, std::vector<double>{0, 0, 0, 0, 1, 2, 3, 4, 4, 4, 4});
  VerifyOptions opt;
  opt.tamper = [](SpanIndex j, RowMajorMatrix<double>& b) {
    if (j.value == 2) b(1, 1) += 1e-3;
  };
  const auto report = verify_knots(kv, opt);
  EXPECT_FALSE(report.all_passed());
  EXPECT_FALSE(find(report, "partition of unity").passed);
  EXPECT_FALSE(find(report, "new vs de Boor (float)").passed);
  EXPECT_TRUE(find(report, "new vs de Boor (exact)").passed);
  EXPECT_NE(report_text(report).find("FAIL"), std::string::npos);
}

TEST(VerifyTest, SparsityViolationIsCaught) {
  VerifyOptions opt;
  opt.tamper = [](SpanIndex, RowMajorMatrix<double>& b) { b(2, 0) = 1e-20; };
  const auto report = verify_knots(bezier_knots(3), opt);
  EXPECT_FALSE(find(report, "boundary sparsity").passed);
}

TEST(VerifyTest, ExactCheckSkippedAtHighDegree) {
  VerifyOptions opt;
  opt.max_exact_degree = 2;
  opt.samples_per_span = 5;
  const auto report = verify_knots(bezier_knots(3), opt);
  EXPECT_TRUE(find(report, "new vs de Boor (exact)").skipped);
  EXPECT_TRUE(report.all_passed());
  EXPECT_NE(report_text(report).find("SKIP"), std::string::npos);
}

}  // namespace
}  // namespace bbspan
