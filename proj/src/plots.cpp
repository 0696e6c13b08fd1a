// Copyright 2026 The tomoent Authors
// SPDX-License-Identifier: Apache-2.0

#include "tomoent/plots.hpp"

#include <fstream>

#include "tomoent/errors.hpp"

namespace tomoent::plots {

namespace fs = std::filesystem;

namespace {

std::string header_of(const fs::path& csv) {
  if (!fs::exists(csv)) throw ConfigError("no such CSV: " + csv.string());
  std::ifstream in(csv);
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("empty CSV: " + csv.string());
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

std::string preamble(const fs::path& csv) {
  return "import csv\n"
         "import os\n"
         "import matplotlib\n"
         "matplotlib.use(\"Agg\")\n"
         "import matplotlib.pyplot as plt\n\n"
         "HERE = os.path.dirname(os.path.abspath(__file__))\n"
         "CSV = " + ("r\"" + fs::absolute(csv).string() + "\"") + "\n\n"
         "def load(path):\n"
         "    with open(path, newline=\"\") as f:\n"
         "        rows = list(csv.DictReader(f))\n"
         "    return {k: [float(r[k]) for r in rows] for k in rows[0]}\n\n"
         "d = load(CSV)\n"
         "fig, ax = plt.subplots(figsize=(6, 4))\n";
}

std::string body(CsvKind kind, const std::string& time_label, const std::string& freq_label) {
  switch (kind) {
    case CsvKind::Indicators:
      return "ax.plot(d[\"t\"], d[\"d2\"], label=\"d2\")\n"
             "ax.plot(d[\"t\"], d[\"d3\"], label=\"d3\")\n"
             "ax.set_xlabel(\"" + time_label + "\")\n"
             "ax.set_ylabel(\"distance\")\n"
             "ax.legend()\n";
    case CsvKind::Lyapunov:
      return "ax.plot(d[\"L\"], d[\"lambda_L\"], \"o\", label=\"Lambda_L\")\n"
             "ax.plot(d[\"L\"], d[\"fit\"], \"-\", label=\"fit\")\n"
             "ax.set_xlabel(\"L\")\n"
             "ax.set_ylabel(\"Lambda_L\")\n"
             "ax.legend()\n";
    case CsvKind::Spectrum:
      return "ax.semilogy(d[\"f\"][1:], d[\"S\"][1:])\n"
             "ax.set_xlabel(\"" + freq_label + "\")\n"
             "ax.set_ylabel(\"S(f)\")\n";
  }
  return {};
}

}  // namespace

CsvKind classify(const fs::path& csv) {
  const std::string h = header_of(csv);
  if (h.rfind("t,", 0) == 0 && h.find("d2") != std::string::npos) return CsvKind::Indicators;
  if (h == "L,lambda_L,fit") return CsvKind::Lyapunov;
  if (h == "f,S") return CsvKind::Spectrum;
  throw ConfigError("unrecognized CSV header in " + csv.string() + ": " + h);
}

fs::path emit_plot(const fs::path& csv, const fs::path& out_dir, const std::string& time_label,
                   const std::string& freq_label) {
  const CsvKind kind = classify(csv);
  fs::create_directories(out_dir);
  const fs::path script = out_dir / (csv.stem().string() + "_plot.py");
  std::ofstream out(script);
  if (!out) throw ConfigError("cannot write " + script.string());
  out << preamble(csv) << body(kind, time_label, freq_label)
      << "fig.tight_layout()\n"
      << "fig.savefig(os.path.join(HERE, \"" << csv.stem().string() << ".png\"), dpi=150)\n";
  return script;
}

std::vector<fs::path> emit_plots(const std::vector<fs::path>& csvs, const fs::path& out_dir,
                                 const std::string& time_label, const std::string& freq_label) {
  std::vector<fs::path> out;
  for (const auto& c : csvs) classify(c);
  for (const auto& c : csvs) out.push_back(emit_plot(c, out_dir, time_label, freq_label));
  return out;
}

}  // namespace tomoent::plots
