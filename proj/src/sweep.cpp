#include "sweep.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "errors.hpp"
#include "sim_engine.hpp"

namespace meecda {

namespace {

namespace fs = std::filesystem;

struct ProtocolAggregate {
  ProtocolKind protocol = ProtocolKind::MEECDA;
  std::vector<double> fnd, hnd, lnd, packets;
  // Running per-round sums; traces shorter than the longest contribute zero
  // alive/residual and their final cumulative packet count.
  std::vector<double> alive_sum, residual_sum, packets_sum;
  std::vector<std::pair<std::size_t, double>> tails;  // (rows, final packets_cum)
};

struct PairDominance {
  std::size_t a = 0, b = 0;             // indices into the protocol list
  std::vector<std::int64_t> crossings;  // per matched seed; kRoundUndefined = never settles
};

void accumulate(ProtocolAggregate& agg, const MetricsTrace& trace) {
  const auto& s = trace.summary;
  agg.fnd.push_back(effective_round(s.fnd, s.rounds_simulated));
  agg.hnd.push_back(effective_round(s.hnd, s.rounds_simulated));
  agg.lnd.push_back(effective_round(s.lnd, s.rounds_simulated));
  agg.packets.push_back(static_cast<double>(s.total_packets));
  if (trace.rows.size() > agg.alive_sum.size()) {
    agg.alive_sum.resize(trace.rows.size(), 0.0);
    agg.residual_sum.resize(trace.rows.size(), 0.0);
    agg.packets_sum.resize(trace.rows.size(), 0.0);
  }
  for (std::size_t r = 0; r < trace.rows.size(); ++r) {
    const auto& row = trace.rows[r];
    agg.alive_sum[r] += row.alive_normal + row.alive_advanced + row.alive_super;
    agg.residual_sum[r] += row.residual_j;
    agg.packets_sum[r] += static_cast<double>(row.packets_cum);
  }
  agg.tails.emplace_back(trace.rows.size(),
                         trace.rows.empty() ? 0.0
                                            : static_cast<double>(trace.rows.back().packets_cum));
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  return out;
}

void write_cell_summary(const fs::path& path, const CellResult& cell) {
  auto out = open_out(path);
  out << "protocol: " << to_string(cell.protocol) << '\n'
      << "seed: " << cell.seed << '\n'
      << "rounds_simulated: " << cell.summary.rounds_simulated << '\n'
      << "first_death_round: " << cell.summary.fnd << '\n'
      << "half_death_round: " << cell.summary.hnd << '\n'
      << "last_death_round: " << cell.summary.lnd << '\n'
      << "total_packets: " << cell.summary.total_packets << '\n';
}

enum class Curve { Alive, Residual, Packets };

double mean_at(const ProtocolAggregate& agg, Curve which, std::size_t r) {
  const std::vector<double>* sums = which == Curve::Alive      ? &agg.alive_sum
                                    : which == Curve::Residual ? &agg.residual_sum
                                                               : &agg.packets_sum;
  double sum = r < sums->size() ? (*sums)[r] : 0.0;
  if (which == Curve::Packets)
    for (const auto& [rows, final_packets] : agg.tails)
      if (r >= rows) sum += final_packets;
  return sum / static_cast<double>(agg.tails.size());
}

void write_curve_file(const fs::path& path, const std::vector<ProtocolAggregate>& aggs,
                      Curve which, std::size_t len) {
  auto out = open_out(path);
  out << "# round";
  for (const auto& agg : aggs) out << ' ' << to_string(agg.protocol);
  out << '\n';
  char buf[64];
  for (std::size_t r = 0; r < len; ++r) {
    out << r;
    for (const auto& agg : aggs) {
      std::snprintf(buf, sizeof buf, " %.9g", mean_at(agg, which, r));
      out << buf;
    }
    out << '\n';
  }
}

void write_lifetime_bars(const fs::path& dir, const std::vector<ProtocolAggregate>& aggs) {
  auto out = open_out(dir / "lifetime_bars.dat");
  out << "# protocol fnd_mean hnd_mean lnd_mean\n";
  char buf[160];
  for (const auto& agg : aggs) {
    std::snprintf(buf, sizeof buf, "%s %.9g %.9g %.9g", to_string(agg.protocol),
                  sample_stats(agg.fnd).mean, sample_stats(agg.hnd).mean,
                  sample_stats(agg.lnd).mean);
    out << buf << '\n';
  }
}

void write_report(const fs::path& path, const Scenario& scn,
                  const std::vector<ProtocolAggregate>& aggs,
                  const std::vector<PairDominance>& pairs) {
  auto out = open_out(path);
  out << "protocol comparison report\n";
  out << "nodes: " << scn.sim.het.n << "  m: " << scn.sim.het.m << "  m0: " << scn.sim.het.m0
      << "  alpha: " << scn.sim.het.alpha << "  beta: " << scn.sim.het.beta << '\n';
  out << "seeds: " << scn.seeds.size() << "  round cap: " << scn.sim.max_rounds << '\n';
  out << '\n';

  char buf[320];
  std::snprintf(buf, sizeof buf, "%-14s %5s %10s %9s %10s %9s %10s %9s %12s %11s", "protocol",
                "seeds", "fnd_mean", "fnd_sd", "hnd_mean", "hnd_sd", "lnd_mean", "lnd_sd",
                "packets_mean", "packets_sd");
  out << buf << '\n';
  for (const auto& agg : aggs) {
    const auto fnd = sample_stats(agg.fnd);
    const auto hnd = sample_stats(agg.hnd);
    const auto lnd = sample_stats(agg.lnd);
    const auto packets = sample_stats(agg.packets);
    std::snprintf(buf, sizeof buf,
                  "%-14s %5lld %10.1f %9.1f %10.1f %9.1f %10.1f %9.1f %12.1f %11.1f",
                  to_string(agg.protocol), static_cast<long long>(fnd.count), fnd.mean, fnd.stddev,
                  hnd.mean, hnd.stddev, lnd.mean, lnd.stddev, packets.mean, packets.stddev);
    out << buf << '\n';
  }

  for (const auto& pair : pairs) {
    const auto& a = aggs[pair.a];
    const auto& b = aggs[pair.b];
    out << '\n' << "pair " << to_string(a.protocol) << " vs " << to_string(b.protocol) << ":\n";
    std::snprintf(buf, sizeof buf,
                  "  fnd_mean_delta: %+.1f\n  hnd_mean_delta: %+.1f\n"
                  "  lnd_mean_delta: %+.1f\n  packets_mean_delta: %+.1f",
                  sample_stats(a.fnd).mean - sample_stats(b.fnd).mean,
                  sample_stats(a.hnd).mean - sample_stats(b.hnd).mean,
                  sample_stats(a.lnd).mean - sample_stats(b.lnd).mean,
                  sample_stats(a.packets).mean - sample_stats(b.packets).mean);
    out << buf << '\n';

    std::vector<std::int64_t> settled;
    for (std::int64_t c : pair.crossings)
      if (c != kRoundUndefined) settled.push_back(c);
    out << "  residual_dominance: " << settled.size() << "/" << pair.crossings.size()
        << " matched seeds";
    if (!settled.empty()) {
      std::sort(settled.begin(), settled.end());
      out << ", median crossing round " << settled[settled.size() / 2];
    }
    out << '\n';
  }
}

}  // namespace

SweepResult run_compare_sweep(const Scenario& scn, const std::string& out_dir) {
  validate(scn);
  if (scn.protocols.size() < 2) throw ConfigError("compare requires >= 2 protocols");
  if (scn.seeds.empty()) throw ConfigError("compare requires >= 1 seed");

  const fs::path out_root = out_dir.empty() ? fs::path(scn.out_dir) : fs::path(out_dir);
  std::error_code ec;
  fs::create_directories(out_root, ec);
  if (ec) throw IoError("cannot create output directory '" + out_root.string() + "'");

  SweepResult result;
  std::vector<ProtocolAggregate> aggs(scn.protocols.size());
  for (std::size_t i = 0; i < scn.protocols.size(); ++i) aggs[i].protocol = scn.protocols[i];

  std::vector<PairDominance> pairs;
  for (std::size_t i = 0; i < scn.protocols.size(); ++i)
    for (std::size_t j = i + 1; j < scn.protocols.size(); ++j)
      pairs.push_back(PairDominance{i, j, {}});

  for (std::uint64_t seed : scn.seeds) {
    std::vector<MetricsTrace> seed_traces;
    seed_traces.reserve(scn.protocols.size());
    for (std::size_t pi = 0; pi < scn.protocols.size(); ++pi) {
      SimulationConfig cfg = scn.sim;
      cfg.protocol = scn.protocols[pi];
      cfg.seed = seed;

      MetricsTrace trace = run_simulation(cfg);

      const fs::path cell_dir = out_root / to_string(cfg.protocol) / std::to_string(seed);
      fs::create_directories(cell_dir, ec);
      if (ec) throw IoError("cannot create output directory '" + cell_dir.string() + "'");

      CellResult cell{cfg.protocol, seed, trace.summary, (cell_dir / "trace.csv").string()};
      export_csv_file(trace, cell.trace_path);
      write_cell_summary(cell_dir / "summary.txt", cell);
      result.cells.push_back(cell);

      accumulate(aggs[pi], trace);
      seed_traces.push_back(std::move(trace));
    }
    for (auto& pair : pairs)
      pair.crossings.push_back(residual_dominance_round(seed_traces[pair.a], seed_traces[pair.b]));
  }

  std::size_t len = 0;
  for (const auto& agg : aggs) len = std::max(len, agg.alive_sum.size());
  write_curve_file(out_root / "alive_per_round.dat", aggs, Curve::Alive, len);
  write_curve_file(out_root / "residual_per_round.dat", aggs, Curve::Residual, len);
  write_curve_file(out_root / "throughput_per_round.dat", aggs, Curve::Packets, len);
  write_lifetime_bars(out_root, aggs);

  const fs::path report = out_root / "report.txt";
  write_report(report, scn, aggs, pairs);
  result.report_path = report.string();
  return result;
}

}  // namespace meecda
