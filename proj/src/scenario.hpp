#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sim_engine.hpp"

namespace meecda {

// A simulation setup plus the sweep lists a comparison runs over. Scenario
// files are flat JSON objects; unknown keys are rejected and missing keys
// keep the preset's value.
struct Scenario {
  SimulationConfig sim;
  std::vector<ProtocolKind> protocols;
  std::vector<std::uint64_t> seeds;
  std::string out_dir = "results";
};

// "case1" and "case2" carry the reference radio constants and the two
// heterogeneity settings (alpha=1/beta=2 and alpha=1.5/beta=3) over a 100 m
// square with the sink at its center.
Scenario scenario_preset(const std::string& name);

// Overlays a JSON scenario file onto scn. Throws ParseError for malformed
// JSON and ConfigError for unknown keys or bad values.
void apply_json_file(Scenario& scn, const std::string& path);
void apply_json_text(Scenario& scn, const std::string& text);

// Single key override from textual form (the flag layer). List-valued keys
// ("protocols", "seeds") take comma-separated values; "seed_count" expands to
// seeds 0..k-1; "d0_override" accepts a number or "none".
void set_value(Scenario& scn, const std::string& key, const std::string& value);

// Textual form of one key's current value.
std::string get_value(const Scenario& scn, const std::string& key);

// Full user-facing validation (stricter than the engine's: max_rounds >= 1).
void validate(const Scenario& scn);

}  // namespace meecda
