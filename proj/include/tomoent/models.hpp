// Copyright 2026 The tomoent Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file models.hpp
 * @brief The two number-conserving bipartite Hamiltonians, initial-state
 *        families and exact time evolution.
 *
 * Atom-field model:
 *   H = w_F a^+a + w_A b^+b + gamma b^+2 b^2 + g (a^+b + a b^+)
 * Double-well condensate:
 *   H = w0 N + w1 (a^+a - b^+b) + U N^2 - lambda (a^+b + a b^+)
 *
 * Both commute with N = a^+a + b^+b, so each is stored as one real
 * symmetric block per total number N in the basis {|N-n; n>}, n = 0..N,
 * together with its eigendecomposition. Evolution is exp(-iHt) applied
 * block by block; there is no time stepping.
 */

#pragma once

#include <Eigen/Dense>
#include <vector>

#include "tomoent/fockcore.hpp"

namespace tomoent::models {

struct AtomFieldParams {
  double omega_f = 1.0;
  double omega_a = 1.0;
  double gamma = 1.0;
  double g = 1.0;

  void validate() const;
};

struct BECParams {
  double omega0 = 1.0;
  double omega1 = 1.0;
  double u = 1.0;
  double lam = 1.0;

  void validate() const;
  /// sqrt(omega1^2 + lam^2).
  double lambda1() const;
  /// Mixing angle with cos = omega1/lambda1 and sin = lam/lambda1; this is
  /// arccos(omega1/lambda1) for lam >= 0 and its negative for lam < 0.
  double gamma_angle() const;
};

class BlockHamiltonian {
 public:
  /// blocks[N] must be a symmetric (N+1)x(N+1) matrix.
  explicit BlockHamiltonian(std::vector<Eigen::MatrixXd> blocks);

  int n_max() const noexcept { return static_cast<int>(blocks_.size()) - 1; }
  const Eigen::MatrixXd& block(int total) const { return blocks_.at(total).h; }
  const Eigen::VectorXd& eigenvalues(int total) const {
    return blocks_.at(total).evals;
  }
  const Eigen::MatrixXd& eigenvectors(int total) const {
    return blocks_.at(total).evecs;
  }
  /// <psi|H|psi> over blocks that fit inside the state's cutoffs.
  double energy(const BipartiteState& state) const;

 private:
  struct Block {
    Eigen::MatrixXd h;
    Eigen::VectorXd evals;
    Eigen::MatrixXd evecs;
  };
  std::vector<Block> blocks_;
};

BlockHamiltonian build_hamiltonian_af(const AtomFieldParams& p, int n_max);
BlockHamiltonian build_hamiltonian_bec(const BECParams& p, int n_max);

/// Truncated coherent state exp(-|a|^2/2) sum a^k/sqrt(k!) |k>, renormalized.
/// Throws ConvergenceError when the discarded tail weighs >= 1e-8.
Eigen::VectorXcd coherent_state(cplx alpha, int cutoff);

/// m! L_m(-|alpha|^2), the squared norm of a^+m |alpha>.
double pacs_norm_squared(cplx alpha, int m);

/// Photon-added coherent state a^+m|alpha> / sqrt(m! L_m(-|alpha|^2)),
/// renormalized after truncation; same convergence rule as coherent_state.
Eigen::VectorXcd pacs_state(cplx alpha, int m, int cutoff);

/// 2^{-N/2} sum_n C(N,n)^{1/2} |N-n; n>.
BipartiteState binomial_state(int total, int cutoff_a, int cutoff_b);

/// exp(zeta* ab - zeta a^+b^+)|0;0>, i.e. c[n][n] = (-e^{i phi} tanh r)^n / cosh r
/// for zeta = r e^{i phi}. Throws ConvergenceError when the tail beyond
/// min(cutoffs) weighs >= 1e-8.
BipartiteState two_mode_squeezed(cplx zeta, int cutoff_a, int cutoff_b);

/// exp(-iHt)|psi>. Blocks N <= min(H.n_max(), cutoffs) are propagated
/// exactly; weight outside them must be < 1e-8 (else ConvergenceError) and
/// is discarded before renormalizing.
BipartiteState evolve(const BipartiteState& state, const BlockHamiltonian& h,
                      double t);

/// Closed-form condensate state at time t for the initial product
/// |alpha_a, m1> (x) |alpha_b, m2>: psi_00(t) with the mode-rotated
/// amplitudes beta_1, beta_2, dressed by the operator M_{m1,m2}(t).
BipartiteState bec_analytic_state(const BECParams& p, cplx alpha_a,
                                  cplx alpha_b, int m1, int m2, double t,
                                  int cutoff_a, int cutoff_b);

/// Amplitudes (beta_1(t), beta_2(t)) of the coherent part of the condensate
/// propagator.
std::pair<cplx, cplx> bec_betas(const BECParams& p, cplx alpha_a, cplx alpha_b,
                                double t);

}  // namespace tomoent::models
