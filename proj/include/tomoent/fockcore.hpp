// Copyright 2026 The tomoent Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file fockcore.hpp
 * @brief Pure two-mode states in a truncated Fock basis, reduced density
 *        matrices and the subsystem entropies (SVNE, SLE).
 *
 * A BipartiteState stores c[m][n] = <m;n|psi> for 0 <= m <= N_A and
 * 0 <= n <= N_B. Mode A is the row index, mode B the column index.
 * Entropies use the natural logarithm (nats).
 */

#pragma once

#include <Eigen/Dense>
#include <complex>

namespace tomoent {

using cplx = std::complex<double>;

enum class Subsystem { A, B };

/// Tolerance on |<psi|psi> - 1| accepted as "normalized".
inline constexpr double kNormTolerance = 1e-10;

/// Weight on the top Fock layer above which a state is flagged as not
/// converged with respect to its cutoffs.
inline constexpr double kLeakageTolerance = 1e-8;

class BipartiteState {
 public:
  /// The vacuum |0;0> with the given cutoffs.
  BipartiteState(int cutoff_a, int cutoff_b);
  explicit BipartiteState(Eigen::MatrixXcd amps);

  /// |a> (x) |b> for single-mode amplitude vectors.
  static BipartiteState product(const Eigen::VectorXcd& a,
                                const Eigen::VectorXcd& b);
  /// Fock basis state |m;n>.
  static BipartiteState basis(int m, int n, int cutoff_a, int cutoff_b);

  int cutoff_a() const noexcept { return static_cast<int>(amps_.rows()) - 1; }
  int cutoff_b() const noexcept { return static_cast<int>(amps_.cols()) - 1; }
  const Eigen::MatrixXcd& amps() const noexcept { return amps_; }
  cplx operator()(int m, int n) const { return amps_(m, n); }

  double norm_squared() const { return amps_.squaredNorm(); }
  bool is_normalized(double tol = kNormTolerance) const;
  /// Copy scaled to unit norm. Throws NormalizationError for the zero vector.
  BipartiteState normalized() const;

  /// Probability on the layer m = N_A or n = N_B.
  double top_layer_weight() const;
  bool is_converged(double tol = kLeakageTolerance) const {
    return top_layer_weight() < tol;
  }

  /// Largest total quantum number m+n carrying weight above `threshold`.
  int max_occupied_total(double threshold = 1e-14) const;
  /// Largest single-mode level carrying marginal weight above `threshold`.
  int max_occupied_level(Subsystem mode, double threshold = 1e-14) const;

  /// <N_tot> and <N_tot^2>.
  double mean_total_number() const;
  double mean_total_number_squared() const;

 private:
  Eigen::MatrixXcd amps_;
};

/// Hermitian, unit-trace density matrix of one mode.
class ReducedDensityMatrix {
 public:
  /// Validates hermiticity (1e-12) and trace (1e-10).
  ReducedDensityMatrix(Eigen::MatrixXcd rho, Subsystem label);

  const Eigen::MatrixXcd& matrix() const noexcept { return rho_; }
  Subsystem label() const noexcept { return label_; }
  int dim() const noexcept { return static_cast<int>(rho_.rows()); }
  /// Ascending eigenvalues.
  Eigen::VectorXd eigenvalues() const;

 private:
  Eigen::MatrixXcd rho_;
  Subsystem label_;
};

/// (rho_A)_{mp} = sum_n c[m][n] conj(c[p][n]); symmetric for B.
/// Throws NormalizationError on non-normalized input.
ReducedDensityMatrix partial_trace(const BipartiteState& state,
                                   Subsystem keep);

/// -sum_k l_k ln l_k. Eigenvalues in [-1e-8, 0) are treated as roundoff and
/// clipped to zero; anything more negative throws.
double svne(const ReducedDensityMatrix& rho);

/// 1 - Tr(rho^2).
double sle(const ReducedDensityMatrix& rho);

/// <s1|s2>. Throws InvalidArgument on cutoff mismatch.
cplx overlap(const BipartiteState& s1, const BipartiteState& s2);

}  // namespace tomoent
