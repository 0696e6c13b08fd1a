// Copyright 2026 The tomoent Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file experiment.hpp
 * @brief Experiment configuration and the end-to-end runners behind the CLI.
 *
 * Configs are JSON documents. Example:
 *
 *   {
 *     "name": "fig1b",
 *     "model": "atom_field",
 *     "params": {"omega_f": 1, "omega_a": 1, "gamma": 1, "g": 100},
 *     "initial_state": {"kind": "cs", "alpha": 1.0},
 *     "cutoffs": [30, 30],
 *     "time": {"dt_scaled": 0.2, "steps": {"full": 2000, "desk": 200}},
 *     "scale": "desk",
 *     "angles": {"n_a": 5, "n_b": 5},
 *     "grid": {"x_max": 8, "n_points": 129},
 *     "seed": 1,
 *     "output_dir": "out/fig1b"
 *   }
 *
 * "dt_scaled" is in units of pi/g (atom-field) or pi/U (condensate); a
 * plain "dt" is in units of time. Output times are written on the same
 * scaled axis, g t / pi or U t / pi.
 */

#pragma once

#include <cstdint>
#include <filesystem>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tomoent/indicators.hpp"
#include "tomoent/models.hpp"
#include "tomoent/tseries.hpp"

namespace tomoent::experiment {

enum class ModelKind { AtomField, Bec };

enum class StateKind { Coherent, Pacs, PacsProduct, Binomial, Squeezed };

struct InitialStateSpec {
  StateKind kind = StateKind::Coherent;
  cplx alpha = 1.0;    // mode A
  cplx alpha_b = 0.0;  // mode B
  int m1 = 0;
  int m2 = 0;
  int total = 0;  // binomial N
  cplx zeta = 0.0;
};

enum class Propagator { Auto, Numeric, Analytic };

struct TimeSeriesSpec {
  std::string column = "d1";
  int max_dim = 10;
  int window_count = 14;
  int n_init = 100;
  double radius_fraction = 0.2;
  int theiler = -1;
};

struct ExperimentConfig {
  std::string name = "experiment";
  ModelKind model = ModelKind::AtomField;
  models::AtomFieldParams af;
  models::BECParams bec;
  InitialStateSpec initial;
  int cutoff_a = 30;
  int cutoff_b = 30;
  double dt = 0.1;  // physical time
  int n_steps = 1;
  int angles_a = 5;
  int angles_b = 5;
  double x_max = 8.0;
  int n_points = 257;
  std::uint64_t seed = 1;
  std::filesystem::path output_dir = "out";
  Propagator propagator = Propagator::Auto;
  TimeSeriesSpec timeseries;

  /// g for the atom-field model, U for the condensate (lambda1 when U = 0).
  double rate() const;
  /// t -> rate t / pi.
  double scaled_time(double t) const { return rate() * t / 3.14159265358979323846; }
  void validate() const;
};

/// Parses a config document; throws ConfigError with the offending key.
ExperimentConfig parse_config(const nlohmann::json& doc);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Applies "a.b.c=value" overrides to a raw document before parsing. The
/// value is read as JSON when it parses, otherwise as a string.
void apply_override(nlohmann::json& doc, const std::string& assignment);

models::BlockHamiltonian build_hamiltonian(const ExperimentConfig& cfg);
BipartiteState initial_state(const ExperimentConfig& cfg);

/// State at time t, using the condensate closed form when selected.
BipartiteState state_at(const ExperimentConfig& cfg, const models::BlockHamiltonian& h,
                        const BipartiteState& psi0, double t);

/// One record per time step t_k = k dt, k = 0..n_steps-1, with t written on
/// the scaled axis. Steps are evaluated concurrently and returned in order.
/// A ConvergenceError names the offending step.
std::vector<indicators::IndicatorRecord> run_indicators(const ExperimentConfig& cfg);

void write_indicator_csv(const std::filesystem::path& path,
                         const std::vector<indicators::IndicatorRecord>& records);

/// Artifacts of the time-series stage.
struct TimeSeriesResult {
  tseries::SeriesReport report;
  std::filesystem::path lyapunov_csv;
  std::filesystem::path spectrum_csv;
  std::filesystem::path fit_summary;
  std::string summary_line;
};

/// Runs the full pipeline on one CSV column and writes lyapunov.csv,
/// spectrum.csv and fit.txt into `out_dir`. `dt` is the sampling step of the
/// column and `freq_unit` divides reported frequencies.
TimeSeriesResult run_timeseries(const std::filesystem::path& csv, const TimeSeriesSpec& spec,
                                double dt, double freq_unit, std::uint64_t seed,
                                const std::filesystem::path& out_dir);

}  // namespace tomoent::experiment
