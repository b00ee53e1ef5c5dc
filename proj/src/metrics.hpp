#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace meecda {

inline constexpr std::int64_t kRoundUndefined = -1;

struct TraceRow {
  std::int64_t round = 0;
  std::int32_t alive_normal = 0;
  std::int32_t alive_advanced = 0;
  std::int32_t alive_super = 0;
  std::int32_t ch_count = 0;
  std::int32_t sleeping = 0;
  std::int64_t packets_round = 0;
  std::int64_t packets_cum = 0;
  double residual_j = 0.0;

  bool operator==(const TraceRow&) const = default;
};

// fnd/hnd/lnd are the first rounds where the alive count drops below the full
// population, to floor(n/2) or below, and to zero; kRoundUndefined when the
// event never happened within the simulated horizon.
struct TraceSummary {
  std::int64_t fnd = kRoundUndefined;
  std::int64_t hnd = kRoundUndefined;
  std::int64_t lnd = kRoundUndefined;
  std::int64_t total_packets = 0;
  std::int64_t rounds_simulated = 0;

  bool operator==(const TraceSummary&) const = default;
};

// Provenance attached by the engine; empty for traces parsed back from CSV.
struct TraceMeta {
  std::string protocol;
  std::uint64_t seed = 0;
  std::string config_digest;  // every config field except the protocol

  bool operator==(const TraceMeta&) const = default;
};

struct MetricsTrace {
  std::int64_t n_initial = 0;
  std::vector<TraceRow> rows;
  TraceSummary summary;
  TraceMeta meta;

  // A trace is its rows plus derived summary; meta is bookkeeping.
  bool operator==(const MetricsTrace& other) const {
    return n_initial == other.n_initial && rows == other.rows && summary == other.summary;
  }
};

TraceSummary summarize_rows(const std::vector<TraceRow>& rows, std::int64_t n_initial);

// Throws std::invalid_argument on an empty trace.
TraceSummary lifetime_summary(const MetricsTrace& trace);

extern const char* const kCsvHeader;

// One header line, one line per round, floats at 9 significant digits, final
// row newline-terminated. Byte-deterministic for a given trace.
void export_csv(const MetricsTrace& trace, std::ostream& out);
std::string export_csv(const MetricsTrace& trace);
void export_csv_file(const MetricsTrace& trace, const std::string& path);

// Inverse of export_csv over the row data. Pass the initial population so the
// summary can be recomputed; n_initial < 0 infers it from the first row's
// alive counts.
MetricsTrace parse_csv(std::istream& in, std::int64_t n_initial = -1);
MetricsTrace parse_csv(const std::string& text, std::int64_t n_initial = -1);

struct SampleStats {
  double mean = 0.0;
  double stddev = 0.0;  // sample (n-1); 0 for fewer than two values
  std::int64_t count = 0;
};

SampleStats sample_stats(const std::vector<double>& values);

// Lifetime rounds with the undefined sentinel replaced by the simulated
// horizon, so runs whose nodes outlive the cap still aggregate.
double effective_round(std::int64_t value, std::int64_t rounds_simulated);

struct PairComparison {
  std::string protocol_a;
  std::string protocol_b;
  double fnd_delta = 0.0;  // a - b, sentinel-substituted
  double hnd_delta = 0.0;
  double lnd_delta = 0.0;
  double packets_delta = 0.0;

  struct Row {
    std::int64_t round = 0;
    std::int32_t alive_a = 0;
    std::int32_t alive_b = 0;
    double residual_a = 0.0;
    double residual_b = 0.0;
  };
  std::vector<Row> per_round;  // shorter trace extended with zeros
};

// Requires both traces to come from the same configuration apart from the
// protocol; throws ConfigError otherwise.
PairComparison compare_summaries(const MetricsTrace& a, const MetricsTrace& b);

// Columnar plot data: round, alive and residual for both sides.
void write_pair_plot(const PairComparison& cmp, std::ostream& out);

// Smallest round from which a's total residual stays >= b's through the end
// of both traces (shorter one extended with zeros); kRoundUndefined when the
// ordering never settles within the horizon.
std::int64_t residual_dominance_round(const MetricsTrace& a, const MetricsTrace& b);

}  // namespace meecda
