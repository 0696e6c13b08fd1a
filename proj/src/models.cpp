// Copyright 2026 The tomoent Authors
// SPDX-License-Identifier: Apache-2.0

#include "tomoent/models.hpp"

#include <cmath>
#include <sstream>

#include "tomoent/errors.hpp"
#include "tomoent/special.hpp"

namespace tomoent::models {

namespace {

bool finite(double x) { return std::isfinite(x); }

void require_tail(double tail, const char* what) {
  if (tail >= kLeakageTolerance) {
    std::ostringstream os;
    os << what << ": truncation tail weight " << tail
       << " exceeds 1e-8; raise the cutoff";
    throw ConvergenceError(os.str());
  }
}

// z^k / sqrt(k!) for k = 0..n, by recurrence.
std::vector<cplx> scaled_powers(cplx z, int n) {
  std::vector<cplx> out(static_cast<std::size_t>(n) + 1);
  out[0] = 1.0;
  for (int k = 1; k <= n; ++k) out[k] = out[k - 1] * z / std::sqrt(static_cast<double>(k));
  return out;
}

double ipow(double x, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

}  // namespace

void AtomFieldParams::validate() const {
  if (!finite(omega_f) || !finite(omega_a) || !finite(gamma) || !finite(g))
    throw InvalidArgument("AtomFieldParams: non-finite parameter");
  if (omega_f <= 0.0 || omega_a <= 0.0)
    throw InvalidArgument("AtomFieldParams: frequencies must be positive");
  if (gamma < 0.0) throw InvalidArgument("AtomFieldParams: gamma must be >= 0");
  if (g == 0.0) throw InvalidArgument("AtomFieldParams: coupling g must be nonzero");
}

void BECParams::validate() const {
  if (!finite(omega0) || !finite(omega1) || !finite(u) || !finite(lam))
    throw InvalidArgument("BECParams: non-finite parameter");
  if (u < 0.0) throw InvalidArgument("BECParams: U must be >= 0");
  if (!(lambda1() > 0.0))
    throw InvalidArgument("BECParams: lambda1 = sqrt(omega1^2 + lambda^2) must be positive");
}

double BECParams::lambda1() const { return std::hypot(omega1, lam); }

double BECParams::gamma_angle() const { return std::atan2(lam, omega1); }

BlockHamiltonian::BlockHamiltonian(std::vector<Eigen::MatrixXd> blocks) {
  blocks_.reserve(blocks.size());
  for (std::size_t total = 0; total < blocks.size(); ++total) {
    auto& h = blocks[total];
    const auto dim = static_cast<Eigen::Index>(total) + 1;
    if (h.rows() != dim || h.cols() != dim)
      throw InvalidArgument("BlockHamiltonian: block N must be (N+1)x(N+1)");
    if ((h - h.transpose()).cwiseAbs().maxCoeff() > 1e-12)
      throw InvalidArgument("BlockHamiltonian: block is not symmetric");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    blocks_.push_back(Block{std::move(h), es.eigenvalues(), es.eigenvectors()});
  }
  if (blocks_.empty()) throw InvalidArgument("BlockHamiltonian: no blocks");
}

double BlockHamiltonian::energy(const BipartiteState& state) const {
  const int n_fit = std::min({n_max(), state.cutoff_a(), state.cutoff_b()});
  const auto& c = state.amps();
  double e = 0.0;
  for (int total = 0; total <= n_fit; ++total) {
    Eigen::VectorXcd v(total + 1);
    for (int n = 0; n <= total; ++n) v(n) = c(total - n, n);
    e += (v.adjoint() * blocks_[total].h.cast<cplx>() * v)(0, 0).real();
  }
  return e;
}

BlockHamiltonian build_hamiltonian_af(const AtomFieldParams& p, int n_max) {
  p.validate();
  if (n_max < 1) throw InvalidArgument("build_hamiltonian_af: n_max must be >= 1");
  std::vector<Eigen::MatrixXd> blocks;
  for (int total = 0; total <= n_max; ++total) {
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(total + 1, total + 1);
    for (int n = 0; n <= total; ++n) {
      h(n, n) = (total - n) * p.omega_f + n * p.omega_a + p.gamma * n * (n - 1.0);
      if (n > 0) {
        const double off = p.g * std::sqrt(static_cast<double>(n) * (total - n + 1));
        h(n - 1, n) = off;
        h(n, n - 1) = off;
      }
    }
    blocks.push_back(std::move(h));
  }
  return BlockHamiltonian(std::move(blocks));
}

BlockHamiltonian build_hamiltonian_bec(const BECParams& p, int n_max) {
  p.validate();
  if (n_max < 1) throw InvalidArgument("build_hamiltonian_bec: n_max must be >= 1");
  std::vector<Eigen::MatrixXd> blocks;
  for (int total = 0; total <= n_max; ++total) {
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(total + 1, total + 1);
    const double shift = p.omega0 * total + p.u * total * static_cast<double>(total);
    for (int n = 0; n <= total; ++n) {
      h(n, n) = shift + p.omega1 * (total - 2.0 * n);
      if (n > 0) {
        const double off = -p.lam * std::sqrt(static_cast<double>(n) * (total - n + 1));
        h(n - 1, n) = off;
        h(n, n - 1) = off;
      }
    }
    blocks.push_back(std::move(h));
  }
  return BlockHamiltonian(std::move(blocks));
}

Eigen::VectorXcd coherent_state(cplx alpha, int cutoff) {
  if (cutoff < 0) throw InvalidArgument("coherent_state: negative cutoff");
  const auto pw = scaled_powers(alpha, cutoff);
  Eigen::VectorXcd v(cutoff + 1);
  const double pref = std::exp(-0.5 * std::norm(alpha));
  for (int k = 0; k <= cutoff; ++k) v(k) = pref * pw[k];
  require_tail(1.0 - v.squaredNorm(), "coherent_state");
  return v / v.norm();
}

double pacs_norm_squared(cplx alpha, int m) {
  if (m < 0) throw InvalidArgument("pacs_norm_squared: negative m");
  return std::exp(special::log_factorial(m)) * special::laguerre(m, -std::norm(alpha));
}

Eigen::VectorXcd pacs_state(cplx alpha, int m, int cutoff) {
  if (m < 0) throw InvalidArgument("pacs_state: negative m");
  if (m > cutoff) throw ConvergenceError("pacs_state: m exceeds the cutoff");
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(cutoff + 1);
  const double pref = std::exp(-0.5 * std::norm(alpha));
  const auto pw = scaled_powers(alpha, cutoff - m);
  for (int k = 0; k + m <= cutoff; ++k) {
    // a^+m |k> = sqrt((k+m)!/k!) |k+m>
    const double raise = std::exp(0.5 * (special::log_factorial(k + m) -
                                         special::log_factorial(k)));
    v(k + m) = pref * pw[k] * raise;
  }
  const double full = pacs_norm_squared(alpha, m);
  require_tail(1.0 - v.squaredNorm() / full, "pacs_state");
  return v / v.norm();
}

BipartiteState binomial_state(int total, int cutoff_a, int cutoff_b) {
  if (total < 0) throw InvalidArgument("binomial_state: negative N");
  if (total > std::min(cutoff_a, cutoff_b))
    throw ConvergenceError("binomial_state: N exceeds a cutoff");
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(cutoff_a + 1, cutoff_b + 1);
  const double pref = std::pow(2.0, -0.5 * total);
  for (int n = 0; n <= total; ++n)
    c(total - n, n) = pref * std::sqrt(special::binomial(total, n));
  return BipartiteState(std::move(c));
}

BipartiteState two_mode_squeezed(cplx zeta, int cutoff_a, int cutoff_b) {
  const double r = std::abs(zeta);
  const double phi = std::arg(zeta);
  const double th = std::tanh(r);
  const int top = std::min(cutoff_a, cutoff_b);
  require_tail(std::pow(th, 2.0 * (top + 1)), "two_mode_squeezed");
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(cutoff_a + 1, cutoff_b + 1);
  const cplx ratio = -std::polar(th, phi);
  cplx amp = 1.0 / std::cosh(r);
  for (int n = 0; n <= top; ++n) {
    c(n, n) = amp;
    amp *= ratio;
  }
  return BipartiteState(c).normalized();
}

BipartiteState evolve(const BipartiteState& state, const BlockHamiltonian& h,
                      double t) {
  const int ca = state.cutoff_a();
  const int cb = state.cutoff_b();
  const int n_fit = std::min({h.n_max(), ca, cb});
  const auto& c = state.amps();

  double outside = 0.0;
  for (int m = 0; m <= ca; ++m)
    for (int n = 0; n <= cb; ++n)
      if (m + n > n_fit) outside += std::norm(c(m, n));
  if (outside >= kLeakageTolerance) {
    std::ostringstream os;
    os << "evolve: weight " << outside << " lies in blocks beyond N = " << n_fit;
    throw ConvergenceError(os.str());
  }

  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(ca + 1, cb + 1);
  for (int total = 0; total <= n_fit; ++total) {
    Eigen::VectorXcd v(total + 1);
    for (int n = 0; n <= total; ++n) v(n) = c(total - n, n);
    if (v.squaredNorm() == 0.0) continue;
    const auto& vecs = h.eigenvectors(total);
    const auto& vals = h.eigenvalues(total);
    Eigen::VectorXcd coeff = vecs.transpose().cast<cplx>() * v;
    for (int k = 0; k <= total; ++k) coeff(k) *= std::polar(1.0, -vals(k) * t);
    const Eigen::VectorXcd w = vecs.cast<cplx>() * coeff;
    for (int n = 0; n <= total; ++n) out(total - n, n) = w(n);
  }
  BipartiteState result(std::move(out));
  return outside > 0.0 ? result.normalized() : result;
}

std::pair<cplx, cplx> bec_betas(const BECParams& p, cplx alpha_a, cplx alpha_b,
                                double t) {
  const double l1 = p.lambda1();
  const double cs = std::cos(l1 * t);
  const double sn = std::sin(l1 * t);
  const cplx i(0.0, 1.0);
  const cplx b1 = alpha_a * cs + (i / l1) * (p.lam * alpha_b - p.omega1 * alpha_a) * sn;
  const cplx b2 = alpha_b * cs + (i / l1) * (p.lam * alpha_a + p.omega1 * alpha_b) * sn;
  return {b1, b2};
}

BipartiteState bec_analytic_state(const BECParams& p, cplx alpha_a,
                                  cplx alpha_b, int m1, int m2, double t,
                                  int cutoff_a, int cutoff_b) {
  p.validate();
  if (m1 < 0 || m2 < 0) throw InvalidArgument("bec_analytic_state: negative m");
  const cplx i(0.0, 1.0);
  const auto [b1, b2] = bec_betas(p, alpha_a, alpha_b, t);
  const auto pa = scaled_powers(b1, cutoff_a);
  const auto pb = scaled_powers(b2, cutoff_b);
  const int added = m1 + m2;
  const double pref = std::exp(-0.5 * (std::norm(alpha_a) + std::norm(alpha_b)));

  // psi_00(t), already multiplied by the number-dependent phase of M.
  Eigen::MatrixXcd base(cutoff_a + 1, cutoff_b + 1);
  for (int q1 = 0; q1 <= cutoff_a; ++q1)
    for (int q2 = 0; q2 <= cutoff_b; ++q2) {
      const double total = q1 + q2;
      const double phase = -t * total * (p.omega0 + p.u * total) -
                           p.u * t * added * (2.0 * total + added);
      base(q1, q2) = pref * pa[q1] * pb[q2] * std::polar(1.0, phase);
    }

  // Coefficients of (a^+)^j (b^+)^(added-j) in the braces of M.
  const double half = 0.5 * p.gamma_angle();
  const double ch = std::cos(half);
  const double sh = std::sin(half);
  const double l1 = p.lambda1();
  std::vector<cplx> coef(static_cast<std::size_t>(added) + 1, 0.0);
  for (int k = 0; k <= m1; ++k)
    for (int l = 0; l <= m2; ++l) {
      const int pbar = k + m2 - l;
      const int qbar = l + m1 - k;
      const cplx rot = std::polar(1.0, 2.0 * (l - k) * l1 * t);
      for (int pp = 0; pp <= pbar; ++pp)
        for (int qq = 0; qq <= qbar; ++qq) {
          const int s = k + l + pp + qq;
          const double sign = ((k - pp) % 2 == 0) ? 1.0 : -1.0;
          const double w = sign * special::binomial(m1, k) * special::binomial(m2, l) *
                           special::binomial(pbar, pp) * special::binomial(qbar, qq) *
                           ipow(ch, s) * ipow(sh, 2 * added - s);
          const int pow_a = pp + qbar - qq;
          coef[pow_a] += w * rot;
        }
    }

  const double kappa =
      1.0 / std::sqrt(pacs_norm_squared(alpha_a, m1) * pacs_norm_squared(alpha_b, m2));
  const cplx global = kappa * std::polar(1.0, -p.omega0 * t * added +
                                                  l1 * t * (m1 - m2));

  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(cutoff_a + 1, cutoff_b + 1);
  for (int ja = 0; ja <= added; ++ja) {
    const int jb = added - ja;
    if (coef[ja] == 0.0) continue;
    for (int m = ja; m <= cutoff_a; ++m)
      for (int n = jb; n <= cutoff_b; ++n) {
        const double raise =
            std::exp(0.5 * (special::log_factorial(m) - special::log_factorial(m - ja) +
                            special::log_factorial(n) - special::log_factorial(n - jb)));
        out(m, n) += coef[ja] * raise * base(m - ja, n - jb);
      }
  }
  out *= global;
  BipartiteState result(std::move(out));
  require_tail(1.0 - result.norm_squared(), "bec_analytic_state");
  return result.normalized();
}

}  // namespace tomoent::models
