// Copyright 2026 The tomoent Authors
// SPDX-License-Identifier: Apache-2.0

#include "tomoent/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "tomoent/errors.hpp"
#include "tomoent/special.hpp"

namespace tomoent::tomography {

QuadratureGrid::QuadratureGrid(double x_max, int n_points)
    : x_max_(x_max), n_points_(n_points) {
  if (!(x_max > 0.0) || !std::isfinite(x_max))
    throw InvalidArgument("QuadratureGrid: x_max must be positive");
  if (n_points < 3 || n_points % 2 == 0)
    throw InvalidArgument("QuadratureGrid: n_points must be odd and >= 3");
  h_ = 2.0 * x_max / (n_points - 1);
  weights_.resize(n_points);
  for (int i = 0; i < n_points; ++i)
    weights_(i) = (i == 0 || i == n_points - 1) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
  weights_ *= h_ / 3.0;
}

Eigen::VectorXd QuadratureGrid::points() const {
  Eigen::VectorXd p(n_points_);
  for (int i = 0; i < n_points_; ++i) p(i) = x(i);
  return p;
}

double QuadratureGrid::integrate(const Eigen::VectorXd& f) const {
  if (f.size() != n_points_) throw InvalidArgument("integrate: size mismatch");
  return weights_.dot(f);
}

double QuadratureGrid::integrate2d(const Eigen::MatrixXd& f) const {
  if (f.rows() != n_points_ || f.cols() != n_points_)
    throw InvalidArgument("integrate2d: size mismatch");
  return weights_.dot(f * weights_);
}

bool QuadratureGrid::supports(int level) const {
  return x_max_ >= std::sqrt(2.0 * level + 1.0) + 3.0;
}

AngleGrid::AngleGrid(std::vector<double> thetas_a, std::vector<double> thetas_b)
    : thetas_a_(std::move(thetas_a)), thetas_b_(std::move(thetas_b)) {
  if (thetas_a_.empty() || thetas_b_.empty())
    throw InvalidArgument("AngleGrid: empty angle list");
}

AngleGrid AngleGrid::equally_spaced(int n_a, int n_b) {
  if (n_a < 1 || n_b < 1) throw InvalidArgument("AngleGrid: need at least one angle");
  auto make = [](int n) {
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) v[k] = k * std::numbers::pi / n;
    return v;
  };
  return AngleGrid(make(n_a), make(n_b));
}

cplx quadrature_overlap(int n, double x, double theta) {
  if (n < 0) throw InvalidArgument("quadrature_overlap: negative level");
  return std::polar(special::hermite_functions(n, x)[n], -n * theta);
}

Eigen::MatrixXd hermite_table(const QuadratureGrid& grid, int max_level) {
  Eigen::MatrixXd t(grid.n_points(), max_level + 1);
  for (int i = 0; i < grid.n_points(); ++i) {
    const auto psi = special::hermite_functions(max_level, grid.x(i));
    for (int n = 0; n <= max_level; ++n) t(i, n) = psi[n];
  }
  return t;
}

TomogramEngine::TomogramEngine(const QuadratureGrid& grid, int cutoff_a, int cutoff_b)
    : grid_(grid),
      psi_a_(hermite_table(grid, cutoff_a)),
      psi_b_(cutoff_b == cutoff_a ? psi_a_ : hermite_table(grid, cutoff_b)) {}

Tomogram TomogramEngine::bipartite(const BipartiteState& state, double theta_a,
                                   double theta_b) const {
  const auto& c = state.amps();
  if (c.rows() != psi_a_.cols() || c.cols() != psi_b_.cols())
    throw InvalidArgument("TomogramEngine: state cutoffs differ from the engine's");
  Eigen::MatrixXd cr(c.rows(), c.cols());
  Eigen::MatrixXd ci(c.rows(), c.cols());
  for (Eigen::Index m = 0; m < c.rows(); ++m)
    for (Eigen::Index n = 0; n < c.cols(); ++n) {
      const cplx v = c(m, n) * std::polar(1.0, -(m * theta_a + n * theta_b));
      cr(m, n) = v.real();
      ci(m, n) = v.imag();
    }
  const Eigen::MatrixXd tr = cr * psi_b_.transpose();
  const Eigen::MatrixXd ti = ci * psi_b_.transpose();
  Eigen::MatrixXd ar = psi_a_ * tr;
  const Eigen::MatrixXd ai = psi_a_ * ti;
  ar = ar.cwiseAbs2() + ai.cwiseAbs2();

  const double total = grid_.integrate2d(ar);
  if (std::abs(total - 1.0) >= kTomogramNormTolerance) {
    std::ostringstream os;
    os << "bipartite tomogram integrates to " << total
       << " on [" << grid_.x_min() << ", " << grid_.x_max() << "] with "
       << grid_.n_points() << " points; grid too small or too coarse";
    throw ConvergenceError(os.str());
  }
  return Tomogram{theta_a, theta_b, grid_, std::move(ar)};
}

ReducedTomogram TomogramEngine::single_mode(const ReducedDensityMatrix& rho,
                                            double theta) const {
  const Eigen::MatrixXd& psi = rho.label() == Subsystem::A ? psi_a_ : psi_b_;
  if (rho.dim() != psi.cols())
    throw InvalidArgument("TomogramEngine: density matrix size differs from cutoff");
  Eigen::MatrixXd rr(rho.dim(), rho.dim());
  for (int m = 0; m < rho.dim(); ++m)
    for (int p = 0; p < rho.dim(); ++p)
      rr(m, p) = (rho.matrix()(m, p) * std::polar(1.0, -(m - p) * theta)).real();
  Eigen::VectorXd w = ((psi * rr).cwiseProduct(psi)).rowwise().sum();
  return ReducedTomogram{theta, rho.label(), grid_, std::move(w)};
}

Tomogram bipartite_tomogram(const BipartiteState& state, double theta_a,
                            double theta_b, const QuadratureGrid& grid) {
  if (!state.is_normalized())
    throw NormalizationError("bipartite_tomogram: state not normalized",
                             1.0 - state.norm_squared());
  return TomogramEngine(grid, state.cutoff_a(), state.cutoff_b())
      .bipartite(state, theta_a, theta_b);
}

ReducedTomogram reduced_tomogram(const Tomogram& t, Subsystem keep) {
  const auto& wts = t.grid.weights();
  Eigen::VectorXd w = keep == Subsystem::A ? (t.w * wts).eval()
                                           : (t.w.transpose() * wts).eval();
  const double theta = keep == Subsystem::A ? t.theta_a : t.theta_b;
  return ReducedTomogram{theta, keep, t.grid, std::move(w)};
}

ReducedTomogram single_mode_tomogram(const ReducedDensityMatrix& rho,
                                     double theta, const QuadratureGrid& grid) {
  const int cut = rho.dim() - 1;
  return TomogramEngine(grid, cut, cut).single_mode(rho, theta);
}

}  // namespace tomoent::tomography
