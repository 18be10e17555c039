#include <gtest/gtest.h>

#include "qbps/rational.hpp"
#include "qbps/simplex.hpp"

using namespace qbps;
using R = Rational;

TEST(Simplex, BealeCyclingExampleTerminates) {
  // Classic program on which the textbook largest-coefficient rule cycles.
  //   min -3/4 x4 + 20 x5 - 1/2 x6 + 6 x7
  //   1/4 x4 -  8 x5 -     x6 + 9 x7 + x1 = 0
  //   1/2 x4 - 12 x5 - 1/2 x6 + 3 x7 + x2 = 0
  //                        x6        + x3 = 1
  lp::Matrix<R> a{{1, 0, 0, R(1, 4), -8, -1, 9},
                  {0, 1, 0, R(1, 2), -12, R(-1, 2), 3},
                  {0, 0, 1, 0, 0, 1, 0}};
  std::vector<R> b{0, 0, 1};
  std::vector<R> c{0, 0, 0, R(-3, 4), 20, R(-1, 2), 6};
  const auto res = lp::minimize(a, b, c);
  ASSERT_EQ(res.status, lp::Status::optimal);
  EXPECT_EQ(res.objective, R(-5, 4));
  for (std::size_t i = 0; i < a.size(); ++i) {
    R lhs = 0;
    for (std::size_t j = 0; j < c.size(); ++j) lhs += a[i][j] * res.x[j];
    EXPECT_EQ(lhs, b[i]);
  }
  for (const auto& x : res.x) EXPECT_GE(x, 0);
}

TEST(Simplex, Infeasible) {
  lp::Matrix<R> a{{1, 1}};
  EXPECT_EQ(lp::minimize(a, {-1}, {1, 1}).status, lp::Status::infeasible);
  EXPECT_FALSE(lp::find_feasible(a, {-1}, 2).has_value());
}

TEST(Simplex, Unbounded) {
  lp::Matrix<R> a{{1, -1}};
  EXPECT_EQ(lp::minimize(a, {1}, {0, -1}).status, lp::Status::unbounded);
}

TEST(Simplex, RedundantRowsAndExactFractions) {
  lp::Matrix<R> a{{1, 1, 0}, {2, 2, 0}, {0, 1, 1}};
  std::vector<R> b{R(1, 3), R(2, 3), R(1, 7)};
  const auto res = lp::minimize(a, b, {0, -1, 0});
  ASSERT_EQ(res.status, lp::Status::optimal);
  EXPECT_EQ(res.objective, R(-1, 7));
  EXPECT_EQ(res.x[0], R(1, 3) - R(1, 7));
}

TEST(Simplex, FeasiblePointSatisfiesConstraints) {
  lp::Matrix<R> a{{1, -1, 0, 0}, {0, 1, -1, 0}, {1, 0, 0, 1}};
  std::vector<R> b{R(1, 2), R(-1, 3), 2};
  const auto x = lp::find_feasible(a, b, 4);
  ASSERT_TRUE(x.has_value());
  for (std::size_t i = 0; i < a.size(); ++i) {
    R lhs = 0;
    for (std::size_t j = 0; j < 4; ++j) lhs += a[i][j] * (*x)[j];
    EXPECT_EQ(lhs, b[i]);
  }
}
