#include "bbspan/bernstein.hpp"

#include <gtest/gtest.h>

#include <random>
#include <vector>

namespace bbspan {
namespace {

using Poly = BernsteinPoly<double>;
using QPoly = BernsteinPoly<Rational>;

Poly poly(std::initializer_list<double> c) {
  Vector<double> v(static_cast<Eigen::Index>(c.size()));
  Eigen::Index k = 0;
  for (double x : c) v(k++) = x;
  return Poly(v);
}

QPoly qpoly(std::initializer_list<Rational> c) {
  Vector<Rational> v(static_cast<Eigen::Index>(c.size()));
  Eigen::Index k = 0;
  for (const auto& x : c) v(k++) = x;
  return QPoly(v);
}

TEST(BernsteinTest, BinomialMatchesPascal) {
  std::vector<std::vector<std::uint64_t>> pascal(61);
  for (int n = 0; n <= 60; ++n) {
    pascal[n].assign(n + 1, 1);
    for (int i = 1; i < n; ++i) pascal[n][i] = pascal[n - 1][i - 1] + pascal[n - 1][i];
    for (int i = 0; i <= n; ++i) ASSERT_EQ(binomial(n, i), pascal[n][i]) << n << " " << i;
  }
  EXPECT_EQ(binomial(5, 6), 0U);
}

TEST(BernsteinTest, EvalBasisExamples) {
  EXPECT_DOUBLE_EQ(eval_basis(2, 1, 0.5), 0.5);
  EXPECT_DOUBLE_EQ(eval_basis(5, 0, 0.0), 1.0);
  EXPECT_EQ(eval_basis(3, 2, Rational(1, 3)), Rational(2, 9));
  EXPECT_THROW((void)eval_basis(3, 4, 0.5), Error);
  EXPECT_THROW((void)eval_basis(3, -1, 0.5), Error);
}

TEST(BernsteinTest, EvalPolyExamples) {
  EXPECT_DOUBLE_EQ(eval_poly(poly({1, 1, 1}), 0.7), 1.0);
  EXPECT_DOUBLE_EQ(eval_poly(poly({0, 0, 1}), 0.5), 0.25);
  EXPECT_DOUBLE_EQ(eval_poly(poly({1, 0}), 0.25), 0.75);
}

TEST(BernsteinTest, MultiplyByTExamples) {
  EXPECT_EQ(multiply_by_t(qpoly({1})), qpoly({0, 1}));
  EXPECT_EQ(multiply_by_t(qpoly({1, 0})), qpoly({0, Rational(1, 2), 0}));
  const auto out = multiply_by_t(qpoly({1, 1}));
  EXPECT_EQ(out, qpoly({0, Rational(1, 2), 1}));
  // Pointwise oracle for the derived example.
  for (const Rational& t : {Rational(0), Rational(1, 4), Rational(1, 2), Rational(1)}) {
    EXPECT_EQ(eval_poly(out, t), t * eval_poly(qpoly({1, 1}), t));
  }
}

TEST(BernsteinTest, DegreeElevateExamples) {
  EXPECT_EQ(degree_elevate(qpoly({1, 0})), qpoly({1, Rational(1, 2), 0}));
  EXPECT_EQ(degree_elevate(qpoly({1})), qpoly({1, 1}));
  const auto out = degree_elevate(qpoly({0, 1, 0}));
  EXPECT_EQ(out, qpoly({0, Rational(2, 3), Rational(2, 3), 0}));
  for (int s = 0; s <= 4; ++s) {
    const Rational t(s, 4);
    EXPECT_EQ(eval_poly(out, t), eval_poly(qpoly({0, 1, 0}), t));
  }
}

TEST(BernsteinTest, DerivativeExamples) {
  EXPECT_EQ(derivative_coeffs(qpoly({0, 1})), qpoly({1}));
  EXPECT_EQ(derivative_coeffs(qpoly({1, 1, 1})), qpoly({0, 0}));
  EXPECT_EQ(derivative_coeffs(qpoly({0, 0, 1})), qpoly({0, 2}));
  try {
    (void)derivative_coeffs(qpoly({3}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeZero);
  }
}

TEST(BernsteinProperty, PartitionOfUnity) {
  for (int n = 0; n <= 30; ++n) {
    for (int s = 0; s <= 20; ++s) {
      const double t = s / 20.0;
      double sum = 0.0;
      for (int i = 0; i <= n; ++i) sum += eval_basis(n, i, t);
      ASSERT_NEAR(sum, 1.0, 1e-13) << "n=" << n << " t=" << t;
    }
  }
}

TEST(BernsteinProperty, DeCasteljauMatchesBasisSum) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  for (int n = 0; n <= 12; ++n) {
    Vector<double> c(n + 1);
    for (int k = 0; k <= n; ++k) c(k) = coef(rng);
    const Poly p(c);
    for (int s = 0; s <= 10; ++s) {
      const double t = s / 10.0;
      double direct = 0.0;
      for (int k = 0; k <= n; ++k) direct += c(k) * eval_basis(n, k, t);
      ASSERT_NEAR(eval_poly(p, t), direct, 1e-13);
    }
  }
}

TEST(BernsteinProperty, ProductAndElevationPreserveValues) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = trial % 15;
    Vector<double> c(n + 1);
    for (int k = 0; k <= n; ++k) c(k) = coef(rng);
    const Poly p(c);
    const Poly tp = multiply_by_t(p);
    const Poly up = degree_elevate(p);
    ASSERT_EQ(tp.degree(), n + 1);
    ASSERT_EQ(up.degree(), n + 1);
    for (int s = 0; s < 10; ++s) {
      const double t = s / 9.0;
      ASSERT_NEAR(eval_poly(tp, t), t * eval_poly(p, t), 1e-13);
      ASSERT_NEAR(eval_poly(up, t), eval_poly(p, t), 1e-13);
    }
  }
}

TEST(BernsteinProperty, DerivativeMatchesCentralDifferences) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  const double h = 1e-5;
  for (int n = 1; n <= 10; ++n) {
    Vector<double> c(n + 1);
    for (int k = 0; k <= n; ++k) c(k) = coef(rng);
    const Poly p(c);
    const Poly d = derivative_coeffs(p);
    for (int s = 1; s < 10; ++s) {
      const double t = s / 10.0;
      const double fd = (eval_poly(p, t + h) - eval_poly(p, t - h)) / (2 * h);
      ASSERT_NEAR(eval_poly(d, t), fd, 1e-6) << "n=" << n;
    }
  }
}

}  // namespace
}  // namespace bbspan
