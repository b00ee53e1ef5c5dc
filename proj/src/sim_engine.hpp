#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "geometry.hpp"
#include "heterogeneity.hpp"
#include "metrics.hpp"
#include "protocols.hpp"
#include "radio_energy.hpp"
#include "rng.hpp"

namespace meecda {

struct SimulationConfig {
  HeterogeneityConfig het;
  RadioParams radio;
  double area_side = 100.0;  // square field, m
  Point bs_pos{50.0, 50.0};
  std::int64_t max_rounds = 20000;
  std::uint64_t seed = 1;
  ProtocolKind protocol = ProtocolKind::MEECDA;
  int max_sleep_rounds = 8;
};

// Engine-level checks; tolerates max_rounds == 0 (yields an empty trace).
// Scenario loading applies the stricter user-facing validation.
void validate_engine_config(const SimulationConfig& cfg);

// Stable textual form of everything but the protocol, used to verify that
// traces being compared come from the same setup.
std::string config_digest(const SimulationConfig& cfg);

struct RoundOutcome {
  std::int64_t round_index = 0;
  RoundPlan plan;
  std::vector<double> energy_spent;  // indexed by node id; capped at the pre-round residual
  std::int64_t packets_to_bs = 0;
  std::vector<int> deaths;  // ids that ran out of energy this round
  double total_residual = 0.0;
};

// Nodes get class-ordered ids (normal first, then advanced, then super) and
// i.i.d. uniform positions over the square drawn from the stream; the same
// seed reproduces the same world bit for bit.
std::vector<NodeState> init_world(const SimulationConfig& cfg, RandomStream& rng);
std::vector<NodeState> init_world(const SimulationConfig& cfg);

// Setup phase (plan_round) followed by steady-state accounting: members
// transmit to their head, heads receive, aggregate, and forward through
// their relay or straight to the sink, direct senders transmit on their own.
// A node that cannot afford a transmission spends its remainder and loses the
// packet; deaths are marked at round end.
RoundOutcome run_round(std::vector<NodeState>& world, const SimulationConfig& cfg,
                       std::int64_t round, RandomStream& rng);

using RoundObserver = std::function<void(const RoundOutcome&, const std::vector<NodeState>&)>;

// Runs rounds from 0 until every node is dead or max_rounds is reached and
// returns the per-round trace with its lifetime summary. The observer, when
// given, sees each round's outcome and the post-round world.
MetricsTrace run_simulation(const SimulationConfig& cfg);
MetricsTrace run_simulation(const SimulationConfig& cfg, const RoundObserver& observer);

}  // namespace meecda
