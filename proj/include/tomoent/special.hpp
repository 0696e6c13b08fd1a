// Copyright 2026 The tomoent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

namespace tomoent::special {

/// L_m(x) by the three-term recurrence
/// (k+1) L_{k+1} = (2k+1-x) L_k - k L_{k-1}.
double laguerre(int m, double x);

/// ln(n!) via lgamma.
double log_factorial(int n);

/// Binomial coefficient C(n, k) as a double; 0 outside 0 <= k <= n.
double binomial(int n, int k);

/// Normalized oscillator eigenfunctions psi_0(x) .. psi_{n_max}(x),
///   psi_n(x) = (2^n n! sqrt(pi))^{-1/2} H_n(x) exp(-x^2/2),
/// from psi_{n+1} = x sqrt(2/(n+1)) psi_n - sqrt(n/(n+1)) psi_{n-1}.
/// Stable for large n where H_n itself overflows.
std::vector<double> hermite_functions(int n_max, double x);

}  // namespace tomoent::special
