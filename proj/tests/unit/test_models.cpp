// Copyright 2026 The tomoent Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "tomoent/errors.hpp"
#include "tomoent/models.hpp"
#include "tomoent/oracles.hpp"
#include "tomoent/special.hpp"

namespace {

using namespace tomoent;
using namespace tomoent::models;

TEST(CoherentState, VacuumAndPoisson) {
  const auto v = coherent_state(0.0, 10);
  EXPECT_EQ(v(0), cplx(1.0));
  for (int k = 1; k <= 10; ++k) EXPECT_EQ(v(k), cplx(0.0));

  const auto c = coherent_state(1.0, 30);
  double mean = 0.0;
  for (int k = 0; k <= 30; ++k) {
    EXPECT_NEAR(std::norm(c(k)), std::exp(-1.0) / std::tgamma(k + 1.0), 1e-15);
    mean += k * std::norm(c(k));
  }
  EXPECT_NEAR(mean, 1.0, 1e-8);
}

TEST(CoherentState, PhaseAndTruncationError) {
  const cplx a = std::polar(1.2, 0.8);
  const auto c = coherent_state(a, 40);
  EXPECT_NEAR(std::arg(c(1) / c(0)), 0.8, 1e-12);
  EXPECT_THROW(coherent_state(3.0, 10), ConvergenceError);
}

TEST(PacsState, ReducesToCoherentAndFock) {
  const cplx a(0.4, -0.3);
  EXPECT_LT((pacs_state(a, 0, 30) - coherent_state(a, 30)).cwiseAbs().maxCoeff(), 1e-15);
  const auto f = pacs_state(0.0, 1, 5);
  EXPECT_NEAR(std::abs(f(1)), 1.0, 1e-15);
  EXPECT_NEAR(f.squaredNorm(), 1.0, 1e-15);
}

TEST(PacsState, NormMatchesLaguerre) {
  // ||a^+m |alpha>||^2 by brute force against m! L_m(-|alpha|^2).
  for (int m = 0; m <= 6; ++m)
    for (double r : {0.3, 1.0, 1.7}) {
      const auto c = coherent_state(r, 80);
      double s = 0.0;
      for (int k = 0; k + m <= 80; ++k) {
        double f = 1.0;
        for (int j = 1; j <= m; ++j) f *= (k + j);
        s += std::norm(c(k)) * f;
      }
      EXPECT_NEAR(pacs_norm_squared(r, m), s, 1e-8 * s) << m << " " << r;
      EXPECT_NEAR(pacs_norm_squared(r, m),
                  std::tgamma(m + 1.0) * special::laguerre(m, -r * r), 1e-9 * s);
    }
}

TEST(BinomialState, SmallN) {
  const auto s0 = binomial_state(0, 5, 5);
  EXPECT_EQ(s0(0, 0), cplx(1.0));
  const auto s1 = binomial_state(1, 5, 5);
  EXPECT_NEAR(s1(1, 0).real(), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(s1(0, 1).real(), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(svne(partial_trace(s1, Subsystem::A)), std::log(2.0), 1e-14);
  const auto s10 = binomial_state(10, 10, 10);
  EXPECT_TRUE(s10.is_normalized());
  EXPECT_NEAR(s10.mean_total_number(), 10.0, 1e-12);
  EXPECT_THROW(binomial_state(11, 10, 12), ConvergenceError);
}

TEST(SqueezedState, ZeroAndTail) {
  const auto s = two_mode_squeezed(0.0, 5, 5);
  EXPECT_EQ(s(0, 0), cplx(1.0));
  EXPECT_THROW(two_mode_squeezed(2.0, 10, 10), ConvergenceError);
  const auto z = two_mode_squeezed(std::polar(0.3, 1.1), 30, 30);
  EXPECT_NEAR(std::arg(-z(1, 1) / z(0, 0)), 1.1, 1e-12);
}

TEST(AtomFieldHamiltonian, TwoByTwoBlock) {
  const auto h = build_hamiltonian_af({1.0, 1.0, 1.0, 0.2}, 5);
  const auto& e = h.eigenvalues(1);
  EXPECT_NEAR(e(0), 0.8, 1e-14);
  EXPECT_NEAR(e(1), 1.2, 1e-14);
}

TEST(AtomFieldHamiltonian, BlockTraceAndKerrTerm) {
  const AtomFieldParams p{1.3, 0.7, 0.9, 0.4};
  const auto h = build_hamiltonian_af(p, 12);
  for (int n_tot = 0; n_tot <= 12; ++n_tot) {
    double tr = 0.0;
    for (int n = 0; n <= n_tot; ++n) tr += (n_tot - n) * p.omega_f + n * p.omega_a + p.gamma * n * (n - 1);
    EXPECT_NEAR(h.block(n_tot).trace(), tr, 1e-12);
  }
  // Kerr term absent for atomic occupation 0 and 1.
  const auto h0 = build_hamiltonian_af({1.3, 0.7, 0.0, 0.4}, 3);
  EXPECT_DOUBLE_EQ(h.block(3)(0, 0), h0.block(3)(0, 0));
  EXPECT_DOUBLE_EQ(h.block(3)(1, 1), h0.block(3)(1, 1));
}

TEST(BecHamiltonian, TwoByTwoBlockAndShifts) {
  const BECParams p{1.0, 0.6, 0.3, 0.8};
  const auto h = build_hamiltonian_bec(p, 8);
  const auto& e = h.eigenvalues(1);
  EXPECT_NEAR(e(0), p.omega0 + p.u - p.lambda1(), 1e-14);
  EXPECT_NEAR(e(1), p.omega0 + p.u + p.lambda1(), 1e-14);

  const auto h_free = build_hamiltonian_bec({1.0, 0.6, 0.0, 0.8}, 8);
  for (int n = 0; n <= 8; ++n) {
    const Eigen::VectorXd diff = h.eigenvalues(n) - h_free.eigenvalues(n);
    EXPECT_LT((diff.array() - p.u * n * n).abs().maxCoeff(), 1e-11);
  }
  const auto h_diag = build_hamiltonian_bec({1.0, 0.6, 0.3, 0.0}, 6);
  for (int n = 0; n <= 6; ++n) {
    const Eigen::MatrixXd b = h_diag.block(n);
    EXPECT_DOUBLE_EQ((b - Eigen::MatrixXd(b.diagonal().asDiagonal())).cwiseAbs().maxCoeff(), 0.0);
  }
}

TEST(Evolve, IdentityAtZero) {
  const auto h = build_hamiltonian_af({1.0, 1.0, 1.0, 2.0}, 20);
  const auto psi = BipartiteState::product(coherent_state(0.8, 20), coherent_state(0.3, 20));
  EXPECT_NEAR(std::norm(overlap(psi, evolve(psi, h, 0.0))), 1.0, 1e-12);
}

TEST(Evolve, ResonantExchange) {
  const double g = 0.7;
  const auto h = build_hamiltonian_af({1.0, 1.0, 0.0, g}, 4);
  const auto psi0 = BipartiteState::basis(1, 0, 4, 4);
  for (double t : {0.0, 0.3, 1.1, 2.5}) {
    const auto psi = evolve(psi0, h, t);
    EXPECT_NEAR(std::norm(psi(1, 0)), oracles::rabi_population(g, t), 1e-12);
    EXPECT_NEAR(std::norm(psi(0, 1)), 1.0 - oracles::rabi_population(g, t), 1e-12);
  }
}

TEST(Evolve, ConservesEnergyAndNorm) {
  const auto h = build_hamiltonian_af({1.0, 1.0, 1.0, 0.2}, 30);
  const auto psi0 = BipartiteState::product(coherent_state(1.0, 30), coherent_state(0.0, 30));
  const double e0 = h.energy(psi0);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 50.0);
  for (int k = 0; k < 10; ++k) {
    const auto psi = evolve(psi0, h, u(rng));
    EXPECT_NEAR(h.energy(psi), e0, 1e-8);
    EXPECT_TRUE(psi.is_normalized());
    EXPECT_NEAR(psi.mean_total_number(), psi0.mean_total_number(), 1e-8);
  }
}

TEST(Evolve, LeakageIsAnError) {
  const auto h = build_hamiltonian_af({1.0, 1.0, 1.0, 1.0}, 4);
  const auto psi = BipartiteState::basis(4, 4, 4, 4);
  EXPECT_THROW(evolve(psi, h, 0.1), ConvergenceError);
}

TEST(BecAnalytic, InitialState) {
  const BECParams p{1.0, 1.0, 1.0, 1.0};
  const cplx a(0.6, 0.2);
  const cplx b(-0.3, 0.5);
  const auto psi = bec_analytic_state(p, a, b, 0, 0, 0.0, 30, 30);
  const auto ref = BipartiteState::product(coherent_state(a, 30), coherent_state(b, 30));
  EXPECT_NEAR(std::norm(overlap(psi, ref)), 1.0, 1e-12);
  const auto [b1, b2] = bec_betas(p, a, b, 0.0);
  EXPECT_LT(std::abs(b1 - a), 1e-15);
  EXPECT_LT(std::abs(b2 - b), 1e-15);
}

TEST(BecAnalytic, BetaRotationIsUnitaryWithoutDetuning) {
  const BECParams p{1.0, 0.0, 0.5, 1.3};
  const cplx a(0.6, 0.2);
  const cplx b(-0.3, 0.5);
  for (double t : {0.1, 0.9, 2.7}) {
    const auto [b1, b2] = bec_betas(p, a, b, t);
    EXPECT_NEAR(std::norm(b1) + std::norm(b2), std::norm(a) + std::norm(b), 1e-13);
  }
}

TEST(BecAnalytic, MatchesNumericPropagator) {
  const BECParams p{1.0, 1.0, 1.0, 1.0};
  const cplx a = std::polar(1.0, 0.4);
  const cplx b = std::polar(1.0, -0.9);
  const auto h = build_hamiltonian_bec(p, 40);
  for (int m1 = 0; m1 <= 1; ++m1)
    for (int m2 = 0; m2 <= 1; ++m2) {
      const auto psi0 = BipartiteState::product(pacs_state(a, m1, 40), pacs_state(b, m2, 40));
      const auto num = evolve(psi0, h, 0.3);
      const auto ana = bec_analytic_state(p, a, b, m1, m2, 0.3, 40, 40);
      EXPECT_GT(std::norm(overlap(num, ana)), 1.0 - 1e-8) << m1 << m2;
    }
}

TEST(BecAnalytic, NegativeHoppingMatchesNumeric) {
  const BECParams p{0.5, 0.8, 0.7, -0.6};
  const cplx a(0.5, 0.5);
  const cplx b(0.9, -0.2);
  const auto h = build_hamiltonian_bec(p, 40);
  const auto psi0 = BipartiteState::product(pacs_state(a, 1, 40), pacs_state(b, 0, 40));
  for (double t : {0.2, 1.3}) {
    const auto num = evolve(psi0, h, t);
    const auto ana = bec_analytic_state(p, a, b, 1, 0, t, 40, 40);
    EXPECT_GT(std::norm(overlap(num, ana)), 1.0 - 1e-8);
  }
}

TEST(Params, Validation) {
  EXPECT_THROW((AtomFieldParams{1.0, 1.0, -1.0, 1.0}.validate()), InvalidArgument);
  EXPECT_THROW((AtomFieldParams{1.0, 1.0, 1.0, 0.0}.validate()), InvalidArgument);
  EXPECT_THROW((BECParams{1.0, 0.0, 1.0, 0.0}.validate()), InvalidArgument);
  EXPECT_NO_THROW((BECParams{1.0, 1.0, 0.0, 1.0}.validate()));
}

}  // namespace
