// Copyright 2026 The tomoent Authors
// SPDX-License-Identifier: Apache-2.0

#include "tomoent/special.hpp"

#include <cmath>
#include <numbers>

#include "tomoent/errors.hpp"

namespace tomoent::special {

double laguerre(int m, double x) {
  if (m < 0) throw InvalidArgument("laguerre: negative order");
  double prev = 1.0;
  if (m == 0) return prev;
  double cur = 1.0 - x;
  for (int k = 1; k < m; ++k) {
    const double next = ((2.0 * k + 1.0 - x) * cur - k * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double log_factorial(int n) {
  if (n < 0) throw InvalidArgument("log_factorial: negative argument");
  return std::lgamma(static_cast<double>(n) + 1.0);
}

double binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<double> hermite_functions(int n_max, double x) {
  if (n_max < 0) throw InvalidArgument("hermite_functions: negative order");
  std::vector<double> psi(static_cast<std::size_t>(n_max) + 1);
  psi[0] = std::exp(-0.5 * x * x) / std::sqrt(std::sqrt(std::numbers::pi));
  if (n_max >= 1) psi[1] = std::sqrt(2.0) * x * psi[0];
  for (int n = 1; n < n_max; ++n) {
    psi[n + 1] = x * std::sqrt(2.0 / (n + 1.0)) * psi[n] -
                 std::sqrt(static_cast<double>(n) / (n + 1.0)) * psi[n - 1];
  }
  return psi;
}

}  // namespace tomoent::special
