// Copyright 2026 The tomoent Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file oracles.hpp
 * @brief Closed-form reference values and synthetic series used to check
 * the numerics. Nothing here calls into the numerical core.
 */

#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace tomoent::oracles {

/// Two-mode squeezed vacuum with squeezing r.
double squeezed_svne(double r);
double squeezed_sle(double r);
/// Schmidt weight of |n;n>: tanh^{2n} r / cosh^2 r.
double squeezed_schmidt_weight(double r, int n);

/// Mutual information of the joint quadrature distribution of a two-mode
/// squeezed vacuum zeta = r e^{i phi} at angles (theta_a, theta_b), from its
/// covariance matrix: -1/2 ln(1 - rho^2), rho = -tanh 2r cos(phi - theta_a - theta_b).
double squeezed_gaussian_mi(double r, double phi, double theta_a, double theta_b);

/// Differential entropy of a vacuum quadrature, 1/2 (1 + ln pi).
double vacuum_quadrature_entropy();
/// Integral of the squared vacuum quadrature density, 1/sqrt(2 pi).
double vacuum_eta_sub();
/// Same for the two-mode vacuum, 1/(2 pi).
double vacuum_eta_ab();

/// Quadrature density of |alpha> at angle theta: Gaussian with mean
/// sqrt(2) Re(alpha e^{-i theta}) and variance 1/2.
double coherent_quadrature_density(std::complex<double> alpha, double theta, double x);

/// |<alpha|beta>|^2 = exp(-|alpha - beta|^2).
double coherent_overlap_squared(std::complex<double> alpha, std::complex<double> beta);

/// Resonant linear exchange starting from |1;0>: population left in |1;0>
/// after time t at coupling g, cos^2(g t).
double rabi_population(double g, double t);

/// x_{k+1} = r x_k (1 - x_k) after discarding `burn` iterates.
std::vector<double> logistic_series(std::size_t n, double r = 4.0, double x0 = 0.3141592653589793,
                                    std::size_t burn = 1000);
/// Largest Lyapunov exponent of the fully chaotic logistic map.
double logistic_exponent();

/// sin(2 pi k dt / period).
std::vector<double> sinusoid_series(std::size_t n, double period, double dt = 1.0);

/// lambda_inf + m / L^q sampled at L, plus uniform noise of the given
/// amplitude drawn from a seeded generator.
std::vector<double> power_law_series(const std::vector<int>& lengths, double lambda_inf,
                                     double m, double q, double noise, std::uint64_t seed);

/// One named oracle comparison.
struct Check {
  std::string name;
  double expected;
  double actual;
  double tolerance;
  bool pass() const;
};

}  // namespace tomoent::oracles
