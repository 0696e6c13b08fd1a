// Copyright 2026 The tomoent Authors
// SPDX-License-Identifier: Apache-2.0

#include "tomoent/csv.hpp"

#include <cmath>
#include <fstream>
#include <tuple>
#include <sstream>

#include "tomoent/errors.hpp"

namespace tomoent::io {

namespace {

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path.string());
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path.string());
  return out;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, sep)) {
    const auto b = cell.find_first_not_of(" \t\r");
    const auto e = cell.find_last_not_of(" \t\r");
    out.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
  }
  return out;
}

}  // namespace

const std::vector<double>& CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return columns[i];
  throw ConfigError("CSV has no column '" + name + "'");
}

CsvTable read_csv(const std::filesystem::path& path) {
  auto in = open_in(path);
  CsvTable t;
  std::string line;
  if (!std::getline(in, line)) throw ConfigError(path.string() + ": empty CSV");
  t.header = split(line, ',');
  t.columns.resize(t.header.size());
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto cells = split(line, ',');
    if (cells.size() != t.header.size()) {
      std::ostringstream os;
      os << path.string() << ": row " << row << " has " << cells.size() << " cells, expected "
         << t.header.size();
      throw ConfigError(os.str());
    }
    for (std::size_t c = 0; c < cells.size(); ++c) {
      try {
        t.columns[c].push_back(std::stod(cells[c]));
      } catch (const std::exception&) {
        throw ConfigError(path.string() + ": non-numeric cell '" + cells[c] + "'");
      }
    }
  }
  return t;
}

void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& columns) {
  if (header.size() != columns.size()) throw InvalidArgument("write_csv: header/column mismatch");
  auto out = open_out(path);
  for (std::size_t c = 0; c < header.size(); ++c) out << (c ? "," : "") << header[c];
  out << '\n';
  out.precision(12);
  const std::size_t rows = columns.empty() ? 0 : columns.front().size();
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? "," : "") << columns[c].at(r);
    out << '\n';
  }
}

void write_lyapunov_csv(const std::filesystem::path& path, const tseries::LyapunovEstimate& est) {
  std::vector<double> ls(est.window_lengths.begin(), est.window_lengths.end());
  std::vector<double> fit;
  for (double l : ls) fit.push_back(est.fit.lambda_inf + est.fit.m * std::pow(l, -est.fit.q));
  write_csv(path, {"L", "lambda_L", "fit"}, {ls, est.lambda_l, fit});
}

void write_spectrum_csv(const std::filesystem::path& path, const tseries::PowerSpectrum& ps) {
  write_csv(path, {"f", "S"}, {ps.freqs, ps.s});
}

void write_state_snapshot(const std::filesystem::path& path, const BipartiteState& state) {
  auto out = open_out(path);
  out << "# bipartite state snapshot\n";
  out << "# cutoff_a " << state.cutoff_a() << " cutoff_b " << state.cutoff_b() << '\n';
  out << "# m n re im\n";
  out.precision(17);
  for (int m = 0; m <= state.cutoff_a(); ++m)
    for (int n = 0; n <= state.cutoff_b(); ++n)
      out << m << ' ' << n << ' ' << state(m, n).real() << ' ' << state(m, n).imag() << '\n';
}

BipartiteState read_state_snapshot(const std::filesystem::path& path) {
  auto in = open_in(path);
  std::string line;
  std::vector<std::tuple<int, int, double, double>> rows;
  int ma = 0;
  int mb = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    int m = 0;
    int n = 0;
    double re = 0.0;
    double im = 0.0;
    if (!(ss >> m >> n >> re >> im) || m < 0 || n < 0)
      throw ConfigError(path.string() + ": malformed snapshot line '" + line + "'");
    ma = std::max(ma, m);
    mb = std::max(mb, n);
    rows.emplace_back(m, n, re, im);
  }
  if (rows.empty()) throw ConfigError(path.string() + ": empty snapshot");
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(ma + 1, mb + 1);
  for (const auto& [m, n, re, im] : rows) c(m, n) = cplx(re, im);
  return BipartiteState(std::move(c));
}

void write_tomogram(const std::filesystem::path& path, const tomography::Tomogram& t) {
  auto out = open_out(path);
  out.precision(12);
  out << "# theta_a " << t.theta_a << '\n';
  out << "# theta_b " << t.theta_b << '\n';
  out << "# grid " << t.grid.x_min() << ' ' << t.grid.x_max() << ' ' << t.grid.n_points() << '\n';
  for (Eigen::Index i = 0; i < t.w.rows(); ++i) {
    for (Eigen::Index j = 0; j < t.w.cols(); ++j) out << (j ? " " : "") << t.w(i, j);
    out << '\n';
  }
}

}  // namespace tomoent::io
