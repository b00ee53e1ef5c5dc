#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "geometry.hpp"
#include "heterogeneity.hpp"
#include "radio_energy.hpp"
#include "rng.hpp"

namespace meecda {

enum class ProtocolKind { MEECDA, EECDAApprox, LeachStyle };

const char* to_string(ProtocolKind k);
std::optional<ProtocolKind> protocol_from_string(std::string_view name);

struct NodeState {
  int id = 0;
  NodeClass cls = NodeClass::Normal;
  Point pos{};
  double energy = 0.0;
  double initial_energy = 0.0;
  std::int64_t last_ch_round = -1;  // -1 = never served as head
  int sleep_rounds_remaining = 0;
  bool alive = true;
};

// One round's assignments. Every alive node lands in exactly one of
// cluster_heads, memberships (as member), sleepers, or direct_senders; a
// relay additionally forwards its head's aggregate on top of its own role.
struct RoundPlan {
  std::int64_t round_index = 0;
  std::vector<int> cluster_heads;                   // ascending ids
  std::vector<std::pair<int, int>> memberships;     // member -> head, ascending member
  std::vector<std::pair<int, int>> relays;          // normal head -> relay, ascending head
  std::vector<int> sleepers;                        // ascending ids
  std::vector<int> direct_senders;                  // ascending ids
};

enum class WakeAction { WakeAsCH, WakeAsMember, KeepSleeping, WakeAndSendDirect };

// Rounds in the per-class rotation window, max(1, round(1/p)).
std::int64_t eligibility_window(double p);

// A node may serve again only after the window containing its last term ends.
bool in_eligible_set(const NodeState& node, double p, std::int64_t round);

// p / (1 - p * (round mod window)): ramps to force a full rotation per window.
double rotation_threshold(double p, std::int64_t round);

// Class-weighted threshold; normal nodes are additionally damped by their
// residual/initial energy ratio so depleted ones step aside.
double election_threshold(const NodeState& node, const HeterogeneityConfig& c, std::int64_t round);

// Classic single-probability rotation threshold.
double leach_threshold(const NodeState& node, double p, std::int64_t round);

// One uniform draw per alive eligible node, ascending id; a node is elected
// when its draw falls below its threshold. Sleeping nodes stay in the lottery
// (an elected sleeper wakes for head duty). Elected nodes leave the eligible
// set until their window resets.
std::vector<int> elect_cluster_heads(std::vector<NodeState>& world, ProtocolKind kind,
                                     const HeterogeneityConfig& c, std::int64_t round,
                                     RandomStream& rng);

// True when joining the nearest head would cost more than transmitting
// straight to the base station.
bool sleep_decision(const RadioParams& p, double nearest_ch_dist, double bs_dist);

// Resolves a mid-sleep node at round start and updates its counter.
WakeAction wake_or_continue(NodeState& node, bool this_round_is_ch, bool found_cheaper_ch);

// Closest alive advanced/super node that is neither a head nor asleep this
// round and sits closer to the head than the base station does. Ties break
// toward the lowest id; nullopt means the head transmits straight to the sink.
std::optional<int> select_relay(const NodeState& head, const std::vector<NodeState>& world,
                                const std::vector<int>& current_heads,
                                const std::vector<int>& asleep, Point bs_pos);

// Full setup phase: election, sleeper resolution, membership assignment, and
// (for the multihop protocol) sleep entry and relay selection. Baselines
// never produce sleepers or relays. With zero heads every awake node sends
// direct. `world` must be indexed by node id.
RoundPlan plan_round(std::vector<NodeState>& world, ProtocolKind kind,
                     const HeterogeneityConfig& c, const RadioParams& radio, Point bs_pos,
                     std::int64_t round, int max_sleep_rounds, RandomStream& rng);

}  // namespace meecda
