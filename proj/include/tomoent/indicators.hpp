// Copyright 2026 The tomoent Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file indicators.hpp
 * @brief Entanglement indicators computed directly from tomograms.
 *
 * Tomographic entropies are differential entropies of the quadrature
 * densities (nats). The mutual information is taken with the sign that
 * makes it nonnegative, S(theta_A) + S(theta_B) - S(theta_A, theta_B).
 *
 * xi_ipr = 1 - <eta_A + eta_B - eta_AB> uses raw square integrals of the
 * densities. It is not rebased, so product states have a state-dependent
 * nonzero value (about 0.3614 for the vacuum).
 */

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tomoent/fockcore.hpp"
#include "tomoent/tomography.hpp"

namespace tomoent::indicators {

using tomography::AngleGrid;
using tomography::QuadratureGrid;
using tomography::ReducedTomogram;
using tomography::Tomogram;

/// -integral of w ln w over both quadratures.
double joint_tomographic_entropy(const Tomogram& t);
/// -integral of w ln w for one mode.
double subsystem_tomographic_entropy(const ReducedTomogram& t);

/// integral of w^2 (1/X^2).
double eta_ab(const Tomogram& t);
/// integral of w^2 (1/X).
double eta_sub(const ReducedTomogram& t);

/// Everything one angle pair contributes.
struct AngleSample {
  double theta_a = 0.0;
  double theta_b = 0.0;
  double s_joint = 0.0;
  double s_a = 0.0;
  double s_b = 0.0;
  double eta_ab = 0.0;
  double eta_a = 0.0;
  double eta_b = 0.0;

  double mutual_information() const { return s_a + s_b - s_joint; }
  double ipr_combination() const { return eta_a + eta_b - eta_ab; }
};

AngleSample sample_angle_pair(const Tomogram& t);

double mutual_information(const BipartiteState& state, double theta_a,
                          double theta_b, const QuadratureGrid& grid);

/// Mean of the sample; no pairs is an error.
double xi_tei_from(const std::vector<double>& mi);
/// Mean over the pairs whose value exceeds mean + 1 population standard
/// deviation; the plain mean when the spread is below 1e-12 or nothing
/// exceeds the threshold. Requires at least 4 samples.
double xi_tei_prime_from(const std::vector<double>& mi);

double xi_tei(const BipartiteState& state, const AngleGrid& angles,
              const QuadratureGrid& grid);
double xi_tei_prime(const BipartiteState& state, const AngleGrid& angles,
                    const QuadratureGrid& grid);
double xi_ipr(const BipartiteState& state, const AngleGrid& angles,
              const QuadratureGrid& grid);

/// Number of differing Fock labels between |m;n> and |p;q>.
int hamming_distance(int m, int n, int p, int q);

struct IndicatorRecord {
  double t = 0.0;
  double svne = 0.0;
  double sle = 0.0;
  double xi_tei = 0.0;
  double xi_tei_prime = 0.0;
  double xi_ipr = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
  double d3 = 0.0;
  double delta_svne_sle = 0.0;

  /// Fills the four distances from the stored indicators.
  static IndicatorRecord assemble(double t, double svne, double sle,
                                  double xi_tei, double xi_tei_prime,
                                  double xi_ipr);
};

/// Computes every indicator of a state, sharing tomograms between the
/// entropy and participation-ratio quantities. Immutable; `evaluate` may be
/// called concurrently.
class IndicatorEvaluator {
 public:
  IndicatorEvaluator(AngleGrid angles, const QuadratureGrid& grid,
                     int cutoff_a, int cutoff_b);

  std::vector<AngleSample> samples(const BipartiteState& state) const;
  IndicatorRecord evaluate(const BipartiteState& state, double t) const;

  const AngleGrid& angles() const noexcept { return angles_; }
  const tomography::TomogramEngine& engine() const noexcept { return engine_; }

 private:
  AngleGrid angles_;
  tomography::TomogramEngine engine_;
};

IndicatorRecord indicator_record(const BipartiteState& state, double t,
                                 const AngleGrid& angles,
                                 const QuadratureGrid& grid);

/// Header line of the indicator CSV.
std::string indicator_csv_header();
/// One CSV row, 12 significant digits; `t` is written as given.
std::string indicator_csv_row(const IndicatorRecord& r);

}  // namespace tomoent::indicators
