// Copyright 2026 The tomoent Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "tomoent/special.hpp"
#include "tomoent/tomography.hpp"

namespace {

using namespace tomoent::special;

TEST(Special, LaguerreLowOrders) {
  for (double x : {-3.0, -0.5, 0.0, 1.7}) {
    EXPECT_DOUBLE_EQ(laguerre(0, x), 1.0);
    EXPECT_NEAR(laguerre(1, x), 1.0 - x, 1e-14);
    EXPECT_NEAR(laguerre(2, x), 0.5 * (x * x - 4.0 * x + 2.0), 1e-13);
    EXPECT_NEAR(laguerre(3, x), (-x * x * x + 9.0 * x * x - 18.0 * x + 6.0) / 6.0, 1e-12);
  }
}

TEST(Special, LaguerreExplicitSum) {
  // L_m(x) = sum_k C(m,k) (-x)^k / k!
  for (int m = 0; m <= 12; ++m) {
    const double x = -1.3;
    double s = 0.0;
    for (int k = 0; k <= m; ++k) s += binomial(m, k) * std::pow(-x, k) / std::tgamma(k + 1.0);
    EXPECT_NEAR(laguerre(m, x), s, 1e-10 * std::abs(s)) << "m=" << m;
  }
}

TEST(Special, LogFactorialAndBinomial) {
  EXPECT_DOUBLE_EQ(log_factorial(0), 0.0);
  EXPECT_NEAR(log_factorial(10), std::log(3628800.0), 1e-12);
  EXPECT_DOUBLE_EQ(binomial(10, 0), 1.0);
  EXPECT_DOUBLE_EQ(binomial(10, 3), 120.0);
  EXPECT_DOUBLE_EQ(binomial(30, 15), 155117520.0);
  EXPECT_DOUBLE_EQ(binomial(5, 7), 0.0);
}

TEST(Special, HermiteFunctionsGroundAndFirst) {
  for (double x : {-2.0, 0.0, 0.4, 3.1}) {
    const auto h = hermite_functions(1, x);
    const double g = std::pow(std::numbers::pi, -0.25) * std::exp(-x * x / 2.0);
    EXPECT_NEAR(h[0], g, 1e-15);
    EXPECT_NEAR(h[1], std::sqrt(2.0) * x * g, 1e-15);
  }
}

TEST(Special, HermiteFunctionsOrthonormalOnGrid) {
  const tomoent::tomography::QuadratureGrid grid(12.0, 801);
  const int n_max = 30;
  Eigen::MatrixXd table(grid.n_points(), n_max + 1);
  for (int i = 0; i < grid.n_points(); ++i) {
    const auto h = hermite_functions(n_max, grid.x(i));
    for (int n = 0; n <= n_max; ++n) table(i, n) = h[n];
  }
  const Eigen::MatrixXd gram = table.transpose() * grid.weights().asDiagonal() * table;
  EXPECT_LT((gram - Eigen::MatrixXd::Identity(n_max + 1, n_max + 1)).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(Special, HermiteFunctionsStayFiniteFarOut) {
  const auto h = hermite_functions(60, 25.0);
  for (double v : h) EXPECT_TRUE(std::isfinite(v));
}

}  // namespace
