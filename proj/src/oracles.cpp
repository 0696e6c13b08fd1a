// Copyright 2026 The tomoent Authors
// SPDX-License-Identifier: Apache-2.0

#include "tomoent/oracles.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace tomoent::oracles {

using std::numbers::pi;

double squeezed_svne(double r) {
  if (r == 0.0) return 0.0;
  const double c2 = std::cosh(r) * std::cosh(r);
  const double s2 = std::sinh(r) * std::sinh(r);
  return c2 * std::log(c2) - s2 * std::log(s2);
}

double squeezed_sle(double r) {
  const double t2 = std::tanh(r) * std::tanh(r);
  return 2.0 * t2 / (1.0 + t2);
}

double squeezed_schmidt_weight(double r, int n) {
  return std::pow(std::tanh(r), 2.0 * n) / (std::cosh(r) * std::cosh(r));
}

double squeezed_gaussian_mi(double r, double phi, double theta_a, double theta_b) {
  const double rho = -std::tanh(2.0 * r) * std::cos(phi - theta_a - theta_b);
  return -0.5 * std::log1p(-rho * rho);
}

double vacuum_quadrature_entropy() { return 0.5 * (1.0 + std::log(pi)); }
double vacuum_eta_sub() { return 1.0 / std::sqrt(2.0 * pi); }
double vacuum_eta_ab() { return 1.0 / (2.0 * pi); }

double coherent_quadrature_density(std::complex<double> alpha, double theta, double x) {
  const double mean = std::sqrt(2.0) * std::real(alpha * std::polar(1.0, -theta));
  return std::exp(-(x - mean) * (x - mean)) / std::sqrt(pi);
}

double coherent_overlap_squared(std::complex<double> alpha, std::complex<double> beta) {
  return std::exp(-std::norm(alpha - beta));
}

double rabi_population(double g, double t) {
  const double c = std::cos(g * t);
  return c * c;
}

std::vector<double> logistic_series(std::size_t n, double r, double x0, std::size_t burn) {
  std::vector<double> out;
  out.reserve(n);
  double x = x0;
  for (std::size_t k = 0; k < burn + n; ++k) {
    x = r * x * (1.0 - x);
    if (k >= burn) out.push_back(x);
  }
  return out;
}

double logistic_exponent() { return std::log(2.0); }

std::vector<double> sinusoid_series(std::size_t n, double period, double dt) {
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k)
    out[k] = std::sin(2.0 * pi * static_cast<double>(k) * dt / period);
  return out;
}

std::vector<double> power_law_series(const std::vector<int>& lengths, double lambda_inf,
                                     double m, double q, double noise, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-noise, noise);
  std::vector<double> out;
  out.reserve(lengths.size());
  for (int L : lengths) out.push_back(lambda_inf + m / std::pow(L, q) + u(rng));
  return out;
}

bool Check::pass() const { return std::abs(expected - actual) < tolerance; }

}  // namespace tomoent::oracles
