#include "metrics.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "errors.hpp"

namespace meecda {

namespace {

std::int32_t alive_total(const TraceRow& row) {
  return row.alive_normal + row.alive_advanced + row.alive_super;
}

}  // namespace

TraceSummary summarize_rows(const std::vector<TraceRow>& rows, std::int64_t n_initial) {
  TraceSummary s;
  s.rounds_simulated = static_cast<std::int64_t>(rows.size());
  const std::int64_t half = n_initial / 2;
  for (const auto& row : rows) {
    const std::int32_t alive = alive_total(row);
    if (s.fnd == kRoundUndefined && alive < n_initial) s.fnd = row.round;
    if (s.hnd == kRoundUndefined && alive <= half) s.hnd = row.round;
    if (s.lnd == kRoundUndefined && alive == 0) s.lnd = row.round;
  }
  if (!rows.empty()) s.total_packets = rows.back().packets_cum;
  return s;
}

TraceSummary lifetime_summary(const MetricsTrace& trace) {
  if (trace.rows.empty()) throw std::invalid_argument("lifetime_summary: empty trace");
  return summarize_rows(trace.rows, trace.n_initial);
}

const char* const kCsvHeader =
    "round,alive_normal,alive_advanced,alive_super,ch_count,sleeping,"
    "packets_round,packets_cum,residual_j";

void export_csv(const MetricsTrace& trace, std::ostream& out) {
  out << kCsvHeader << '\n';
  char line[256];
  for (const auto& r : trace.rows) {
    std::snprintf(line, sizeof line, "%lld,%d,%d,%d,%d,%d,%lld,%lld,%.9g",
                  static_cast<long long>(r.round), r.alive_normal, r.alive_advanced,
                  r.alive_super, r.ch_count, r.sleeping, static_cast<long long>(r.packets_round),
                  static_cast<long long>(r.packets_cum), r.residual_j);
    out << line << '\n';
  }
}

std::string export_csv(const MetricsTrace& trace) {
  std::ostringstream out;
  export_csv(trace, out);
  return out.str();
}

void export_csv_file(const MetricsTrace& trace, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  export_csv(trace, out);
  out.flush();
  if (!out) throw IoError("failed writing trace to '" + path + "'");
}

namespace {

template <typename T>
T parse_number(std::string_view field, std::size_t line_no) {
  T value{};
  const char* first = field.data();
  const char* last = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw ParseError("trace csv line " + std::to_string(line_no) + ": bad field '" +
                     std::string(field) + "'");
  return value;
}

}  // namespace

MetricsTrace parse_csv(std::istream& in, std::int64_t n_initial) {
  MetricsTrace trace;
  std::string line;
  if (!std::getline(in, line)) throw ParseError("trace csv: missing header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader) throw ParseError("trace csv: unexpected header '" + line + "'");

  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    std::vector<std::string_view> fields;
    std::string_view rest = line;
    while (true) {
      const auto comma = rest.find(',');
      fields.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (fields.size() != 9)
      throw ParseError("trace csv line " + std::to_string(line_no) + ": expected 9 fields, got " +
                       std::to_string(fields.size()));

    TraceRow row;
    row.round = parse_number<std::int64_t>(fields[0], line_no);
    row.alive_normal = parse_number<std::int32_t>(fields[1], line_no);
    row.alive_advanced = parse_number<std::int32_t>(fields[2], line_no);
    row.alive_super = parse_number<std::int32_t>(fields[3], line_no);
    row.ch_count = parse_number<std::int32_t>(fields[4], line_no);
    row.sleeping = parse_number<std::int32_t>(fields[5], line_no);
    row.packets_round = parse_number<std::int64_t>(fields[6], line_no);
    row.packets_cum = parse_number<std::int64_t>(fields[7], line_no);
    row.residual_j = parse_number<double>(fields[8], line_no);
    trace.rows.push_back(row);
  }

  trace.n_initial = n_initial >= 0 ? n_initial
                    : trace.rows.empty() ? 0
                                         : alive_total(trace.rows.front());
  trace.summary = summarize_rows(trace.rows, trace.n_initial);
  return trace;
}

MetricsTrace parse_csv(const std::string& text, std::int64_t n_initial) {
  std::istringstream in(text);
  return parse_csv(in, n_initial);
}

SampleStats sample_stats(const std::vector<double>& values) {
  SampleStats s;
  s.count = static_cast<std::int64_t>(values.size());
  if (values.empty()) return s;
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  if (values.size() < 2) return s;
  double sq = 0.0;
  for (double v : values) sq += (v - s.mean) * (v - s.mean);
  s.stddev = std::sqrt(sq / static_cast<double>(values.size() - 1));
  return s;
}

double effective_round(std::int64_t value, std::int64_t rounds_simulated) {
  return static_cast<double>(value == kRoundUndefined ? rounds_simulated : value);
}

PairComparison compare_summaries(const MetricsTrace& a, const MetricsTrace& b) {
  if (!a.meta.config_digest.empty() && !b.meta.config_digest.empty() &&
      a.meta.config_digest != b.meta.config_digest)
    throw ConfigError("compare_summaries: traces come from different configurations");

  PairComparison cmp;
  cmp.protocol_a = a.meta.protocol;
  cmp.protocol_b = b.meta.protocol;
  cmp.fnd_delta = effective_round(a.summary.fnd, a.summary.rounds_simulated) -
                  effective_round(b.summary.fnd, b.summary.rounds_simulated);
  cmp.hnd_delta = effective_round(a.summary.hnd, a.summary.rounds_simulated) -
                  effective_round(b.summary.hnd, b.summary.rounds_simulated);
  cmp.lnd_delta = effective_round(a.summary.lnd, a.summary.rounds_simulated) -
                  effective_round(b.summary.lnd, b.summary.rounds_simulated);
  cmp.packets_delta =
      static_cast<double>(a.summary.total_packets) - static_cast<double>(b.summary.total_packets);

  const std::size_t len = std::max(a.rows.size(), b.rows.size());
  cmp.per_round.reserve(len);
  for (std::size_t r = 0; r < len; ++r) {
    PairComparison::Row row;
    row.round = static_cast<std::int64_t>(r);
    if (r < a.rows.size()) {
      row.alive_a = alive_total(a.rows[r]);
      row.residual_a = a.rows[r].residual_j;
    }
    if (r < b.rows.size()) {
      row.alive_b = alive_total(b.rows[r]);
      row.residual_b = b.rows[r].residual_j;
    }
    cmp.per_round.push_back(row);
  }
  return cmp;
}

void write_pair_plot(const PairComparison& cmp, std::ostream& out) {
  out << "# round alive_" << cmp.protocol_a << " alive_" << cmp.protocol_b << " residual_"
      << cmp.protocol_a << " residual_" << cmp.protocol_b << '\n';
  char line[192];
  for (const auto& row : cmp.per_round) {
    std::snprintf(line, sizeof line, "%lld %d %d %.9g %.9g", static_cast<long long>(row.round),
                  row.alive_a, row.alive_b, row.residual_a, row.residual_b);
    out << line << '\n';
  }
}

std::int64_t residual_dominance_round(const MetricsTrace& a, const MetricsTrace& b) {
  const std::int64_t len = static_cast<std::int64_t>(std::max(a.rows.size(), b.rows.size()));
  const auto residual = [](const MetricsTrace& t, std::int64_t r) {
    return r < static_cast<std::int64_t>(t.rows.size()) ? t.rows[static_cast<std::size_t>(r)].residual_j
                                                        : 0.0;
  };
  std::int64_t last_violation = -1;
  for (std::int64_t r = 0; r < len; ++r)
    if (residual(a, r) < residual(b, r)) last_violation = r;
  const std::int64_t crossing = last_violation + 1;
  return crossing >= len ? kRoundUndefined : crossing;
}

}  // namespace meecda
