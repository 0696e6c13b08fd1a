// Copyright 2026 The tomoent Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file tomography.hpp
 * @brief Optical tomograms of two-mode states on a quadrature grid.
 *
 * The rotated quadrature X_theta = (a e^{-i theta} + a^+ e^{i theta})/sqrt(2)
 * has eigenvectors |x,theta> = e^{i theta a^+a}|x>, so
 *   <x,theta|n> = e^{-i n theta} psi_n(x)
 * with psi_n the normalized oscillator eigenfunction. With this convention
 * the quadrature mean of |alpha> is sqrt(2) Re(alpha e^{-i theta}).
 *
 * All integrals use composite Simpson quadrature on a symmetric uniform grid
 * with an odd number of points.
 */

#pragma once

#include <Eigen/Dense>
#include <vector>

#include "tomoent/fockcore.hpp"

namespace tomoent::tomography {

/// Tolerance on the normalization of computed tomograms.
inline constexpr double kTomogramNormTolerance = 1e-6;

class QuadratureGrid {
 public:
  /// [-x_max, x_max] with n_points (odd, >= 3) samples.
  QuadratureGrid(double x_max, int n_points);
  /// [-8, 8], 257 points.
  static QuadratureGrid standard() { return QuadratureGrid(8.0, 257); }

  double x_min() const noexcept { return -x_max_; }
  double x_max() const noexcept { return x_max_; }
  int n_points() const noexcept { return n_points_; }
  double spacing() const noexcept { return h_; }
  double x(int i) const noexcept { return -x_max_ + i * h_; }
  Eigen::VectorXd points() const;
  /// Composite Simpson weights (include the spacing).
  const Eigen::VectorXd& weights() const noexcept { return weights_; }

  double integrate(const Eigen::VectorXd& f) const;
  double integrate2d(const Eigen::MatrixXd& f) const;

  /// True when x_max >= sqrt(2*level + 1) + 3, i.e. the grid extends three
  /// units beyond the classical turning point of Fock level `level`.
  bool supports(int level) const;

 private:
  double x_max_;
  int n_points_;
  double h_;
  Eigen::VectorXd weights_;
};

class AngleGrid {
 public:
  AngleGrid(std::vector<double> thetas_a, std::vector<double> thetas_b);
  /// theta_k = k pi / n for k = 0..n-1, independently per mode.
  static AngleGrid equally_spaced(int n_a, int n_b);

  const std::vector<double>& thetas_a() const noexcept { return thetas_a_; }
  const std::vector<double>& thetas_b() const noexcept { return thetas_b_; }
  std::size_t pair_count() const noexcept {
    return thetas_a_.size() * thetas_b_.size();
  }

 private:
  std::vector<double> thetas_a_;
  std::vector<double> thetas_b_;
};

struct Tomogram {
  double theta_a = 0.0;
  double theta_b = 0.0;
  QuadratureGrid grid = QuadratureGrid::standard();
  /// w(x_a[i], x_b[j]); units of 1/X^2.
  Eigen::MatrixXd w;
};

struct ReducedTomogram {
  double theta = 0.0;
  Subsystem label = Subsystem::A;
  QuadratureGrid grid = QuadratureGrid::standard();
  Eigen::VectorXd w;
};

/// <x,theta|n>.
cplx quadrature_overlap(int n, double x, double theta);

/// Table psi_n(x_i) for all grid points and n = 0..max_level.
Eigen::MatrixXd hermite_table(const QuadratureGrid& grid, int max_level);

/// Grid plus cached eigenfunction table for one pair of cutoffs. Immutable
/// after construction and safe to share between threads.
class TomogramEngine {
 public:
  TomogramEngine(const QuadratureGrid& grid, int cutoff_a, int cutoff_b);

  const QuadratureGrid& grid() const noexcept { return grid_; }

  /// w = |Psi_A D_A C D_B Psi_B^T|^2 with D = diag(e^{-i n theta}).
  /// Throws ConvergenceError when the result is not normalized to 1e-6.
  Tomogram bipartite(const BipartiteState& state, double theta_a,
                     double theta_b) const;
  /// <x,theta|rho|x,theta> for a single-mode density matrix.
  ReducedTomogram single_mode(const ReducedDensityMatrix& rho,
                              double theta) const;

 private:
  QuadratureGrid grid_;
  Eigen::MatrixXd psi_a_;
  Eigen::MatrixXd psi_b_;
};

Tomogram bipartite_tomogram(const BipartiteState& state, double theta_a,
                            double theta_b, const QuadratureGrid& grid);

/// Marginal of a bipartite tomogram over the other mode.
ReducedTomogram reduced_tomogram(const Tomogram& t, Subsystem keep);

/// Tomogram of a reduced density matrix, computed without the bipartite
/// tomogram.
ReducedTomogram single_mode_tomogram(const ReducedDensityMatrix& rho,
                                     double theta, const QuadratureGrid& grid);

}  // namespace tomoent::tomography
