// Copyright 2026 The tomoent Authors
// SPDX-License-Identifier: Apache-2.0

#include "tomoent/fockcore.hpp"

#include <cmath>
#include <sstream>

#include "tomoent/errors.hpp"

namespace tomoent {

BipartiteState::BipartiteState(int cutoff_a, int cutoff_b) {
  if (cutoff_a < 0 || cutoff_b < 0)
    throw InvalidArgument("BipartiteState: negative cutoff");
  amps_ = Eigen::MatrixXcd::Zero(cutoff_a + 1, cutoff_b + 1);
  amps_(0, 0) = 1.0;
}

BipartiteState::BipartiteState(Eigen::MatrixXcd amps) : amps_(std::move(amps)) {
  if (amps_.rows() == 0 || amps_.cols() == 0)
    throw InvalidArgument("BipartiteState: empty amplitude matrix");
}

BipartiteState BipartiteState::product(const Eigen::VectorXcd& a,
                                       const Eigen::VectorXcd& b) {
  return BipartiteState(a * b.transpose());
}

BipartiteState BipartiteState::basis(int m, int n, int cutoff_a, int cutoff_b) {
  if (m < 0 || n < 0 || m > cutoff_a || n > cutoff_b)
    throw InvalidArgument("BipartiteState::basis: level outside cutoff");
  BipartiteState s(cutoff_a, cutoff_b);
  s.amps_(0, 0) = 0.0;
  s.amps_(m, n) = 1.0;
  return s;
}

bool BipartiteState::is_normalized(double tol) const {
  return std::abs(norm_squared() - 1.0) <= tol;
}

BipartiteState BipartiteState::normalized() const {
  const double n2 = norm_squared();
  if (!(n2 > 0.0)) throw NormalizationError("cannot normalize zero state", 1.0);
  return BipartiteState(amps_ / std::sqrt(n2));
}

double BipartiteState::top_layer_weight() const {
  const auto na = amps_.rows();
  const auto nb = amps_.cols();
  double w = amps_.row(na - 1).squaredNorm() + amps_.col(nb - 1).squaredNorm();
  w -= std::norm(amps_(na - 1, nb - 1));
  return w;
}

int BipartiteState::max_occupied_total(double threshold) const {
  int best = 0;
  for (Eigen::Index m = 0; m < amps_.rows(); ++m)
    for (Eigen::Index n = 0; n < amps_.cols(); ++n)
      if (std::norm(amps_(m, n)) > threshold)
        best = std::max(best, static_cast<int>(m + n));
  return best;
}

int BipartiteState::max_occupied_level(Subsystem mode, double threshold) const {
  const Eigen::VectorXd marginal = mode == Subsystem::A
                                       ? amps_.cwiseAbs2().rowwise().sum().eval()
                                       : amps_.cwiseAbs2().colwise().sum().transpose().eval();
  for (Eigen::Index k = marginal.size() - 1; k > 0; --k)
    if (marginal(k) > threshold) return static_cast<int>(k);
  return 0;
}

double BipartiteState::mean_total_number() const {
  double s = 0.0;
  for (Eigen::Index m = 0; m < amps_.rows(); ++m)
    for (Eigen::Index n = 0; n < amps_.cols(); ++n)
      s += static_cast<double>(m + n) * std::norm(amps_(m, n));
  return s;
}

double BipartiteState::mean_total_number_squared() const {
  double s = 0.0;
  for (Eigen::Index m = 0; m < amps_.rows(); ++m)
    for (Eigen::Index n = 0; n < amps_.cols(); ++n) {
      const double tot = static_cast<double>(m + n);
      s += tot * tot * std::norm(amps_(m, n));
    }
  return s;
}

ReducedDensityMatrix::ReducedDensityMatrix(Eigen::MatrixXcd rho, Subsystem label)
    : rho_(std::move(rho)), label_(label) {
  if (rho_.rows() != rho_.cols() || rho_.rows() == 0)
    throw InvalidArgument("ReducedDensityMatrix: matrix must be square");
  const double herm = (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
  if (herm > 1e-12) {
    std::ostringstream os;
    os << "ReducedDensityMatrix: not Hermitian (max |rho - rho^+| = " << herm << ")";
    throw InvalidArgument(os.str());
  }
  const double tr = rho_.trace().real();
  if (std::abs(tr - 1.0) > kNormTolerance) {
    std::ostringstream os;
    os << "ReducedDensityMatrix: trace " << tr << " differs from 1";
    throw NormalizationError(os.str(), 1.0 - tr);
  }
}

Eigen::VectorXd ReducedDensityMatrix::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho_, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

ReducedDensityMatrix partial_trace(const BipartiteState& state, Subsystem keep) {
  const double n2 = state.norm_squared();
  if (std::abs(n2 - 1.0) > kNormTolerance) {
    std::ostringstream os;
    os << "partial_trace: state not normalized (norm deficit " << 1.0 - n2 << ")";
    throw NormalizationError(os.str(), 1.0 - n2);
  }
  const auto& c = state.amps();
  Eigen::MatrixXcd rho = keep == Subsystem::A
                             ? (c * c.adjoint()).eval()
                             : (c.transpose() * c.conjugate()).eval();
  // Symmetrize away the last-bit asymmetry of the product.
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return ReducedDensityMatrix(std::move(rho), keep);
}

double svne(const ReducedDensityMatrix& rho) {
  const Eigen::VectorXd ev = rho.eigenvalues();
  double s = 0.0;
  for (double l : ev) {
    if (l < -1e-8) {
      std::ostringstream os;
      os << "svne: eigenvalue " << l << " is negative beyond roundoff";
      throw InvalidArgument(os.str());
    }
    if (l > 0.0) s -= l * std::log(l);
  }
  return s;
}

double sle(const ReducedDensityMatrix& rho) {
  return 1.0 - rho.matrix().cwiseAbs2().sum();
}

cplx overlap(const BipartiteState& s1, const BipartiteState& s2) {
  if (s1.cutoff_a() != s2.cutoff_a() || s1.cutoff_b() != s2.cutoff_b())
    throw InvalidArgument("overlap: cutoff mismatch");
  return (s1.amps().conjugate().cwiseProduct(s2.amps())).sum();
}

}  // namespace tomoent
