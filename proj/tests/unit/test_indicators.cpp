// Copyright 2026 The tomoent Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "tomoent/errors.hpp"
#include "tomoent/indicators.hpp"
#include "tomoent/models.hpp"
#include "tomoent/oracles.hpp"

namespace {

using namespace tomoent;
using namespace tomoent::indicators;
using std::numbers::pi;

const QuadratureGrid kGrid(8.0, 129);

// -integral of w ln w for a 1-D density, by dense trapezoid on [-12, 12].
double entropy_1d(double (*w)(double)) {
  const int n = 200001;
  const double h = 24.0 / (n - 1);
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = -12.0 + i * h;
    const double v = w(x);
    if (v > 0.0) s -= (i == 0 || i == n - 1 ? 0.5 : 1.0) * v * std::log(v) * h;
  }
  return s;
}

TEST(Entropies, VacuumGaussians) {
  const auto t = tomography::bipartite_tomogram(BipartiteState(3, 3), 0.0, 0.0, kGrid);
  const auto a = tomography::reduced_tomogram(t, Subsystem::A);
  EXPECT_NEAR(joint_tomographic_entropy(t), 1.0 + std::log(pi), 1e-7);
  EXPECT_NEAR(subsystem_tomographic_entropy(a), oracles::vacuum_quadrature_entropy(), 1e-7);
  EXPECT_NEAR(eta_sub(a), oracles::vacuum_eta_sub(), 1e-9);
  EXPECT_NEAR(eta_ab(t), oracles::vacuum_eta_ab(), 1e-9);
}

TEST(Entropies, FockOne) {
  const auto psi = BipartiteState::basis(1, 0, 3, 3);
  const double expect = entropy_1d([](double x) { return 2.0 * x * x * std::exp(-x * x) / std::sqrt(pi); });
  // x^2 log x^2 at the node slows convergence; fine grid for the tight check.
  const QuadratureGrid fine(8.0, 4097);
  const auto a = tomography::reduced_tomogram(tomography::bipartite_tomogram(psi, 0.8, 0.0, fine), Subsystem::A);
  EXPECT_NEAR(subsystem_tomographic_entropy(a), expect, 1e-6);
  const auto coarse = tomography::reduced_tomogram(tomography::bipartite_tomogram(psi, 0.8, 0.0, kGrid), Subsystem::A);
  EXPECT_NEAR(subsystem_tomographic_entropy(coarse), expect, 1e-3);
}

TEST(Entropies, CoherentIsTranslationInvariant) {
  for (cplx alpha : {cplx(0.5, 0.0), cplx(-1.0, 1.2)})
    for (double th : {0.0, 1.3}) {
      const auto psi = BipartiteState::product(models::coherent_state(alpha, 35), models::coherent_state(0.0, 2));
      const auto a = tomography::reduced_tomogram(tomography::bipartite_tomogram(psi, th, 0.0, kGrid), Subsystem::A);
      EXPECT_NEAR(subsystem_tomographic_entropy(a), oracles::vacuum_quadrature_entropy(), 1e-7);
      EXPECT_NEAR(eta_sub(a), oracles::vacuum_eta_sub(), 1e-8);
    }
}

TEST(Entropies, ProductStateAdditivity) {
  const auto psi = BipartiteState::product(models::pacs_state(0.8, 2, 25), models::coherent_state(cplx(0.1, 0.4), 25));
  const auto t = tomography::bipartite_tomogram(psi, 0.5, 2.0, kGrid);
  const auto a = tomography::reduced_tomogram(t, Subsystem::A);
  const auto b = tomography::reduced_tomogram(t, Subsystem::B);
  EXPECT_NEAR(joint_tomographic_entropy(t), subsystem_tomographic_entropy(a) + subsystem_tomographic_entropy(b), 1e-7);
  EXPECT_NEAR(eta_ab(t), eta_sub(a) * eta_sub(b), 1e-8);
}

TEST(Entropies, SqueezedJointEntropyMatchesCovariance) {
  const double r = 0.1;
  const auto t = tomography::bipartite_tomogram(models::two_mode_squeezed(r, 30, 30), 0.0, 0.0, kGrid);
  const double va = std::cosh(2.0 * r) / 2.0;
  const double cab = -std::sinh(2.0 * r) / 2.0;
  const double det = va * va - cab * cab;
  EXPECT_NEAR(joint_tomographic_entropy(t), 0.5 * std::log(std::pow(2.0 * pi * std::exp(1.0), 2) * det), 1e-6);
}

TEST(MutualInformation, ProductStatesVanish) {
  const auto psi = BipartiteState::product(models::pacs_state(1.0, 1, 25), models::coherent_state(0.5, 25));
  for (double ta : {0.0, 0.9})
    for (double tb : {0.3, 2.1}) EXPECT_NEAR(mutual_information(psi, ta, tb, kGrid), 0.0, 1e-7);
}

TEST(MutualInformation, SqueezedGaussianOracle) {
  const auto psi = models::two_mode_squeezed(0.5, 40, 40);
  EXPECT_NEAR(mutual_information(psi, 0.0, 0.0, kGrid), oracles::squeezed_gaussian_mi(0.5, 0.0, 0.0, 0.0), 1e-4);
  EXPECT_NEAR(mutual_information(psi, 0.4, 0.3, kGrid), oracles::squeezed_gaussian_mi(0.5, 0.0, 0.4, 0.3), 1e-4);
}

TEST(MutualInformation, SwapSymmetry) {
  const auto psi = models::binomial_state(3, 8, 8);
  EXPECT_NEAR(mutual_information(psi, 0.2, 1.1, kGrid), mutual_information(psi, 1.1, 0.2, kGrid), 1e-10);
}

TEST(Xi, TeiFromSamples) {
  EXPECT_THROW(xi_tei_from({}), InvalidArgument);
  EXPECT_DOUBLE_EQ(xi_tei_from({1.0, 2.0, 3.0}), 2.0);
  const std::vector<double> flat(25, 0.3);
  EXPECT_DOUBLE_EQ(xi_tei_prime_from(flat), 0.3);
  // mean 1.5, sd sqrt(1.25) -> threshold 2.618: only 3.
  EXPECT_DOUBLE_EQ(xi_tei_prime_from({0.0, 1.0, 2.0, 3.0}), 3.0);
  EXPECT_THROW(xi_tei_prime_from({1.0, 2.0, 3.0}), InvalidArgument);
}

TEST(Xi, ProductStatesAndSqueezing) {
  const auto angles = AngleGrid::equally_spaced(5, 5);
  const auto prod = BipartiteState::product(models::coherent_state(1.0, 30), models::coherent_state(0.0, 30));
  EXPECT_LT(std::abs(xi_tei(prod, angles, kGrid)), 1e-7);
  EXPECT_LT(std::abs(xi_tei_prime(prod, angles, kGrid)), 1e-6);

  const auto sq = models::two_mode_squeezed(0.1, 30, 30);
  EXPECT_GE(xi_tei_prime(sq, angles, kGrid), xi_tei(sq, angles, kGrid));
}

TEST(Xi, AngleGridRefinementIsStable) {
  const auto sq = models::two_mode_squeezed(0.2, 30, 30);
  const double coarse = xi_tei(sq, AngleGrid::equally_spaced(5, 5), kGrid);
  const double fine = xi_tei(sq, AngleGrid::equally_spaced(10, 10), kGrid);
  EXPECT_LT(std::abs(coarse - fine) / fine, 0.05);
}

TEST(Xi, IprVacuumAndSqueezing) {
  const auto angles = AngleGrid::equally_spaced(5, 5);
  const double vac = xi_ipr(BipartiteState(4, 4), angles, kGrid);
  EXPECT_NEAR(vac, 1.0 - (2.0 / std::sqrt(2.0 * pi) - 1.0 / (2.0 * pi)), 1e-8);
  EXPECT_GT(xi_ipr(models::two_mode_squeezed(0.7, 40, 40), angles, kGrid),
            xi_ipr(models::two_mode_squeezed(0.1, 40, 40), angles, kGrid));
}

TEST(Hamming, Cases) {
  EXPECT_EQ(hamming_distance(0, 1, 1, 0), 2);
  EXPECT_EQ(hamming_distance(3, 5, 3, 5), 0);
  EXPECT_EQ(hamming_distance(2, 7, 2, 9), 1);
  EXPECT_EQ(hamming_distance(4, 7, 2, 7), 1);
}

TEST(Record, ProductStateAtStart) {
  const auto psi = BipartiteState::product(models::coherent_state(1.0, 30), models::coherent_state(0.0, 30));
  const auto r = indicator_record(psi, 0.0, AngleGrid::equally_spaced(5, 5), kGrid);
  for (double v : {r.svne, r.sle, r.d1, r.d2, r.delta_svne_sle}) EXPECT_LT(std::abs(v), 1e-6);
}

TEST(Record, InternalConsistency) {
  const auto psi = models::binomial_state(3, 8, 8);
  const auto r = indicator_record(psi, 1.5, AngleGrid::equally_spaced(5, 5), kGrid);
  EXPECT_EQ(r.t, 1.5);
  EXPECT_EQ(r.d1, std::abs(r.svne - r.xi_tei_prime));
  EXPECT_EQ(r.d2, std::abs(r.sle - r.xi_tei_prime));
  EXPECT_EQ(r.d3, std::abs(r.sle - r.xi_ipr));
  EXPECT_EQ(r.delta_svne_sle, std::abs(r.svne - r.sle));
  EXPECT_GE(r.delta_svne_sle, 0.0);
}

TEST(Record, SqueezedUnderAtomFieldKeepsOrdering) {
  const auto h = models::build_hamiltonian_af({1.0, 1.0, 1.0, 0.2}, 30);
  const auto psi0 = models::two_mode_squeezed(0.1, 30, 30);
  const IndicatorEvaluator eval(AngleGrid::equally_spaced(5, 5), kGrid, 30, 30);
  for (double gt_over_pi : {0.4, 1.0, 2.2}) {
    const auto r = eval.evaluate(models::evolve(psi0, h, gt_over_pi * pi / 0.2), gt_over_pi);
    EXPECT_LT(r.d2, r.delta_svne_sle) << gt_over_pi;
  }
}

TEST(Record, CsvRow) {
  const auto r = IndicatorRecord::assemble(0.5, 0.25, 0.125, 0.0625, 0.1, 0.2);
  EXPECT_EQ(indicator_csv_header(), "t,svne,sle,xi_tei,xi_tei_prime,xi_ipr,d1,d2,d3,delta");
  EXPECT_EQ(indicator_csv_row(r), "0.5,0.25,0.125,0.0625,0.1,0.2,0.15,0.025,0.075,0.125");
}

}  // namespace
