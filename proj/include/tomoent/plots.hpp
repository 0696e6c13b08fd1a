// Copyright 2026 The tomoent Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file plots.hpp
 * @brief Emits self-contained matplotlib scripts for the CSV artifacts.
 */

#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace tomoent::plots {

enum class CsvKind { Indicators, Lyapunov, Spectrum };

/// Classifies a CSV by its header row. Throws ConfigError on a missing file
/// or an unrecognized header.
CsvKind classify(const std::filesystem::path& csv);

/// Writes <stem>_plot.py next to `out_dir` for one CSV and returns its path.
/// `time_label` names the indicator time axis, `freq_label` the spectrum
/// frequency axis.
std::filesystem::path emit_plot(const std::filesystem::path& csv,
                                const std::filesystem::path& out_dir,
                                const std::string& time_label = "g t / pi",
                                const std::string& freq_label = "f / g");

std::vector<std::filesystem::path> emit_plots(const std::vector<std::filesystem::path>& csvs,
                                              const std::filesystem::path& out_dir,
                                              const std::string& time_label = "g t / pi",
                                              const std::string& freq_label = "f / g");

}  // namespace tomoent::plots
