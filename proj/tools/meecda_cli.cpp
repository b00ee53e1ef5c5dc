// Command-line front end. Talks to the simulator exclusively through the
// shared library's C interface.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "meecda/meecda.h"

namespace {

namespace fs = std::filesystem;

struct ScenarioHandle {
  meecda_scenario* ptr = nullptr;
  ~ScenarioHandle() { meecda_scenario_destroy(ptr); }
};

struct TraceHandle {
  meecda_trace* ptr = nullptr;
  ~TraceHandle() { meecda_trace_destroy(ptr); }
};

[[noreturn]] void die(const std::string& context) {
  std::cerr << "error: " << context << ": " << meecda_last_error() << '\n';
  std::exit(1);
}

void check(meecda_status status, const std::string& context) {
  if (status != MEECDA_OK) die(context);
}

std::string scenario_value(const meecda_scenario* scn, const char* key) {
  char buf[4096];
  check(meecda_scenario_get(scn, key, buf, sizeof buf), std::string("reading key ") + key);
  return buf;
}

std::string join_csv(const std::vector<std::string>& items) {
  std::string joined;
  for (const auto& item : items) {
    if (!joined.empty()) joined += ',';
    joined += item;
  }
  return joined;
}

struct CommonFlags {
  std::string preset = "case1";
  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  std::int64_t rounds = 0;
  CLI::App* cmd = nullptr;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  flags.cmd = cmd;
  cmd->add_option("--preset", flags.preset, "Parameter preset (case1|case2)")
      ->check(CLI::IsMember({"case1", "case2"}));
  cmd->add_option("--config", flags.config_path, "Scenario file (JSON)")
      ->check(CLI::ExistingFile);
  cmd->add_option("--seed", flags.seed, "Run seed");
  cmd->add_option("--rounds", flags.rounds, "Round cap")->check(CLI::PositiveNumber);
  cmd->add_option("--out", flags.out_dir, "Output directory");
}

// Precedence: flags > scenario file > preset defaults.
meecda_scenario* build_scenario(const CommonFlags& flags) {
  meecda_scenario* scn = nullptr;
  check(meecda_scenario_create(flags.preset.c_str(), &scn), "creating scenario");
  if (!flags.config_path.empty())
    check(meecda_scenario_load_file(scn, flags.config_path.c_str()), "loading scenario file");
  if (flags.cmd->count("--seed"))
    check(meecda_scenario_set(scn, "seed", std::to_string(flags.seed).c_str()), "setting seed");
  if (flags.cmd->count("--rounds"))
    check(meecda_scenario_set(scn, "max_rounds", std::to_string(flags.rounds).c_str()),
          "setting max_rounds");
  if (flags.cmd->count("--out"))
    check(meecda_scenario_set(scn, "out_dir", flags.out_dir.c_str()), "setting out_dir");
  return scn;
}

void write_summary_file(const fs::path& path, const std::string& protocol,
                        const std::string& seed, const meecda_trace_summary& s) {
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot write " << path << '\n';
    std::exit(1);
  }
  out << "protocol: " << protocol << '\n'
      << "seed: " << seed << '\n'
      << "rounds_simulated: " << s.rounds_simulated << '\n'
      << "first_death_round: " << s.first_death_round << '\n'
      << "half_death_round: " << s.half_death_round << '\n'
      << "last_death_round: " << s.last_death_round << '\n'
      << "total_packets: " << s.total_packets << '\n';
}

int cmd_run(const CommonFlags& flags, const std::string& protocol, bool protocol_given) {
  ScenarioHandle scn{build_scenario(flags)};
  if (protocol_given)
    check(meecda_scenario_set(scn.ptr, "protocol", protocol.c_str()), "setting protocol");

  TraceHandle trace;
  check(meecda_run(scn.ptr, &trace.ptr), "running simulation");

  const std::string protocol_name = scenario_value(scn.ptr, "protocol");
  const std::string seed = scenario_value(scn.ptr, "seed");
  const fs::path cell_dir = fs::path(scenario_value(scn.ptr, "out_dir")) / protocol_name / seed;
  std::error_code ec;
  fs::create_directories(cell_dir, ec);
  if (ec) {
    std::cerr << "error: cannot create " << cell_dir << '\n';
    return 1;
  }

  const fs::path trace_path = cell_dir / "trace.csv";
  check(meecda_trace_write_csv(trace.ptr, trace_path.string().c_str()), "writing trace");

  meecda_trace_summary summary{};
  check(meecda_trace_get_summary(trace.ptr, &summary), "reading summary");
  write_summary_file(cell_dir / "summary.txt", protocol_name, seed, summary);

  std::printf("fnd=%" PRId64 " hnd=%" PRId64 " lnd=%" PRId64 " total_packets=%" PRId64 "\n",
              summary.first_death_round, summary.half_death_round, summary.last_death_round,
              summary.total_packets);
  std::printf("trace: %s\n", trace_path.string().c_str());
  return 0;
}

int cmd_compare(const CommonFlags& flags, const std::vector<std::string>& protocols,
                std::uint64_t seed_count, bool seed_count_given) {
  ScenarioHandle scn{build_scenario(flags)};
  if (seed_count_given)
    check(meecda_scenario_set(scn.ptr, "seed_count", std::to_string(seed_count).c_str()),
          "setting seed_count");
  if (!protocols.empty())
    check(meecda_scenario_set(scn.ptr, "protocols", join_csv(protocols).c_str()),
          "setting protocols");
  if (flags.cmd->count("--seed"))
    check(meecda_scenario_set(scn.ptr, "seeds", std::to_string(flags.seed).c_str()),
          "setting seeds");

  check(meecda_compare(scn.ptr, nullptr), "running comparison");

  const fs::path report = fs::path(scenario_value(scn.ptr, "out_dir")) / "report.txt";
  std::ifstream in(report);
  if (in) std::cout << in.rdbuf();
  std::printf("report: %s\n", report.string().c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Round-based simulator for three-level heterogeneous sensor networks"};
  app.require_subcommand(1);

  CommonFlags run_flags;
  std::string run_protocol;
  auto* run = app.add_subcommand("run", "Run one simulation and write its trace");
  add_common(run, run_flags);
  run->add_option("--protocol", run_protocol, "meecda|eecda-approx|leach")
      ->check(CLI::IsMember({"meecda", "eecda-approx", "leach"}));

  CommonFlags compare_flags;
  std::vector<std::string> compare_protocols;
  std::uint64_t seed_count = 0;
  auto* compare =
      app.add_subcommand("compare", "Run a protocol x seed sweep and write a comparison report");
  add_common(compare, compare_flags);
  compare->add_option("--seeds", seed_count, "Number of seeds (expands to 0..n-1)")
      ->check(CLI::PositiveNumber);
  compare
      ->add_option("--protocol", compare_protocols,
                   "Protocol to include (repeatable; default from scenario)")
      ->check(CLI::IsMember({"meecda", "eecda-approx", "leach"}));

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) return cmd_run(run_flags, run_protocol, run->count("--protocol") > 0);
  return cmd_compare(compare_flags, compare_protocols, seed_count,
                     compare->count("--seeds") > 0);
}
