// Copyright 2026 The tomoent Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file tseries.hpp
 * @brief Nonlinear time-series analysis of indicator differences: delay
 *        embedding, false nearest neighbors, averaged local Lyapunov
 *        exponents with the power-law extrapolation
 *        Lambda_L = Lambda_inf + m / L^q, and periodograms.
 *
 * Exponents are per unit physical time. One embedding step advances `delay`
 * samples, i.e. delay * dt in time.
 */

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tomoent/kdtree.hpp"

namespace tomoent::tseries {

struct TimeSeries {
  std::vector<double> values;
  double dt = 1.0;
  std::string label;

  std::size_t size() const noexcept { return values.size(); }
};

struct DelayEmbedding {
  int delay = 1;
  int dim = 1;
  /// Row i is (x_i, x_{i+delay}, ..., x_{i+(dim-1)delay}).
  PointMatrix vectors;

  int count() const noexcept { return static_cast<int>(vectors.rows()); }
};

DelayEmbedding embed(const TimeSeries& ts, int delay, int dim);

/// Histogram estimate (equal-width bins over the data range) of the mutual
/// information between x_t and x_{t+lag} for lag = 0..max_lag, in nats.
std::vector<double> lagged_mutual_information(std::span<const double> x, int max_lag,
                                              int bins = 16);
/// Normalized autocorrelation for lag = 0..max_lag.
std::vector<double> autocorrelation(std::span<const double> x, int max_lag);

/// First prominent minimum of the lagged mutual information. A local
/// minimum counts only if the curve later rises above it by at least 5% of
/// its total range; otherwise the first lag with autocorrelation <= 1/e is
/// used. Requires >= 1000 samples; constant data throws
/// DegenerateSeriesError.
int estimate_delay(const TimeSeries& ts);

/// False-nearest-neighbor fractions for dim = 1..max_dim. A neighbor is
/// false when the added coordinate stretches the distance by more than a
/// factor 10, or when the extended distance exceeds twice the series
/// standard deviation.
std::vector<double> fnn_fractions(const TimeSeries& ts, int delay, int max_dim);
/// Smallest dimension whose FNN fraction is below 1%. Throws
/// DegenerateSeriesError listing the curve when none qualifies.
int fnn_embedding_dim(const TimeSeries& ts, int delay, int max_dim = 10);

struct LyapunovOptions {
  int n_init = 100;
  std::uint64_t seed = 1;
  /// Temporal exclusion half-width in samples; negative means 2 * delay.
  int theiler = -1;
  /// Neighbor search radius as a fraction of the data range (max - min);
  /// scaled by sqrt(dim) for the Euclidean norm.
  double radius_fraction = 0.2;
};

/// Average over n_init random base points of the maximum local exponent
/// over L embedding steps.
double local_lyapunov(const DelayEmbedding& emb, int L, double dt,
                      const LyapunovOptions& opt = {});

struct PowerLawFit {
  double lambda_inf = 0.0;
  double m = 0.0;
  double q = 0.0;
  /// Root-mean-square residual of the fit.
  double residual = 0.0;
};

/// Least squares Lambda_L = lambda_inf + m / L^q: log grid over q in
/// [0.05, 3] with a linear solve for (lambda_inf, m) at each q, then a
/// Brent refinement around the best grid point.
PowerLawFit fit_lambda_inf(std::span<const double> window_lengths,
                           std::span<const double> lambda_l);

struct LyapunovEstimate {
  std::vector<int> window_lengths;
  std::vector<double> lambda_l;
  PowerLawFit fit;
};

/// `count` strictly increasing, roughly geometric window lengths (in
/// embedding steps) from 5 up to about length / (20 * delay).
std::vector<int> default_window_lengths(std::size_t length, int delay, int count = 14);

LyapunovEstimate lyapunov_analysis(const DelayEmbedding& emb, double dt,
                                   const std::vector<int>& window_lengths,
                                   const LyapunovOptions& opt = {});

struct PowerSpectrum {
  /// Frequencies (cycles per unit time) divided by the reporting unit.
  std::vector<double> freqs;
  std::vector<double> s;
};

/// One-sided periodogram of the mean-subtracted series, rectangular window,
/// normalized so that sum(s) equals the population variance.
PowerSpectrum power_spectrum(const TimeSeries& ts, double freq_unit = 1.0);

/// Everything the time-series pipeline produces for one series.
struct SeriesReport {
  int delay = 1;
  int dim = 1;
  std::vector<double> fnn;
  LyapunovEstimate lyapunov;
  PowerSpectrum spectrum;
};

struct PipelineOptions {
  int max_dim = 10;
  int window_count = 14;
  double freq_unit = 1.0;
  LyapunovOptions lyapunov;
};

SeriesReport analyze(const TimeSeries& ts, const PipelineOptions& opt = {});

}  // namespace tomoent::tseries
