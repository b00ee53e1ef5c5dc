#pragma once

#include <string>
#include <vector>

#include "metrics.hpp"
#include "scenario.hpp"

namespace meecda {

struct CellResult {
  ProtocolKind protocol;
  std::uint64_t seed = 0;
  TraceSummary summary;
  std::string trace_path;
};

struct SweepResult {
  std::vector<CellResult> cells;
  std::string report_path;
};

// Runs every protocol x seed cell, writing <out>/<protocol>/<seed>/trace.csv
// and summary.txt per cell, aggregate plot data (alive, throughput, residual
// per round plus lifetime bars), and <out>/report.txt. Requires at least two
// protocols and one seed. An empty out_dir falls back to the scenario's.
SweepResult run_compare_sweep(const Scenario& scn, const std::string& out_dir = "");

}  // namespace meecda
