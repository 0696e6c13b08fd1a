// Copyright 2026 The tomoent Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file csv.hpp
 * @brief Plain-text formats: CSV tables, state snapshots, tomogram dumps.
 *
 * State snapshot: '#'-prefixed header lines, then one amplitude per line as
 *   m n re im
 * with 17 significant digits so that a snapshot round-trips exactly.
 *
 * Tomogram dump: header lines
 *   # theta_a <value>
 *   # theta_b <value>
 *   # grid <x_min> <x_max> <n_points>
 * followed by n_points rows of n_points values w(x_a[i], x_b[j]).
 */

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "tomoent/fockcore.hpp"
#include "tomoent/tomography.hpp"
#include "tomoent/tseries.hpp"

namespace tomoent::io {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;

  /// Throws ConfigError when the column is absent.
  const std::vector<double>& column(const std::string& name) const;
  std::size_t rows() const { return columns.empty() ? 0 : columns.front().size(); }
};

CsvTable read_csv(const std::filesystem::path& path);

/// Writes a table with 12 significant digits.
void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& columns);

void write_lyapunov_csv(const std::filesystem::path& path, const tseries::LyapunovEstimate& est);
void write_spectrum_csv(const std::filesystem::path& path, const tseries::PowerSpectrum& ps);

void write_state_snapshot(const std::filesystem::path& path, const BipartiteState& state);
BipartiteState read_state_snapshot(const std::filesystem::path& path);

void write_tomogram(const std::filesystem::path& path, const tomography::Tomogram& t);

}  // namespace tomoent::io
