#include "protocols.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace meecda {

const char* to_string(ProtocolKind k) {
  switch (k) {
    case ProtocolKind::MEECDA: return "meecda";
    case ProtocolKind::EECDAApprox: return "eecda-approx";
    case ProtocolKind::LeachStyle: return "leach";
  }
  return "?";
}

std::optional<ProtocolKind> protocol_from_string(std::string_view name) {
  if (name == "meecda") return ProtocolKind::MEECDA;
  if (name == "eecda-approx") return ProtocolKind::EECDAApprox;
  if (name == "leach") return ProtocolKind::LeachStyle;
  return std::nullopt;
}

std::int64_t eligibility_window(double p) {
  const std::int64_t w = std::llround(1.0 / p);
  return w < 1 ? 1 : w;
}

bool in_eligible_set(const NodeState& node, double p, std::int64_t round) {
  if (node.last_ch_round < 0) return true;
  return node.last_ch_round < round - round % eligibility_window(p);
}

double rotation_threshold(double p, std::int64_t round) {
  const double denom = 1.0 - p * static_cast<double>(round % eligibility_window(p));
  if (!(denom > 0.0)) throw std::logic_error("rotation threshold denominator not positive");
  return p / denom;
}

double election_threshold(const NodeState& node, const HeterogeneityConfig& c,
                          std::int64_t round) {
  const double p = weighted_probability(c, node.cls);
  if (!node.alive || !in_eligible_set(node, p, round)) return 0.0;
  const double base = rotation_threshold(p, round);
  if (node.cls == NodeClass::Normal) return base * (node.energy / node.initial_energy);
  return base;
}

double leach_threshold(const NodeState& node, double p, std::int64_t round) {
  if (!node.alive || !in_eligible_set(node, p, round)) return 0.0;
  return rotation_threshold(p, round);
}

namespace {

double threshold_for(const NodeState& node, ProtocolKind kind, const HeterogeneityConfig& c,
                     std::int64_t round) {
  switch (kind) {
    case ProtocolKind::MEECDA:
      return election_threshold(node, c, round);
    case ProtocolKind::EECDAApprox: {
      const double p = weighted_probability(c, node.cls);
      return in_eligible_set(node, p, round) ? rotation_threshold(p, round) : 0.0;
    }
    case ProtocolKind::LeachStyle:
      return leach_threshold(node, c.p_opt, round);
  }
  return 0.0;
}

double election_probability(ProtocolKind kind, const HeterogeneityConfig& c, NodeClass cls) {
  return kind == ProtocolKind::LeachStyle ? c.p_opt : weighted_probability(c, cls);
}

}  // namespace

std::vector<int> elect_cluster_heads(std::vector<NodeState>& world, ProtocolKind kind,
                                     const HeterogeneityConfig& c, std::int64_t round,
                                     RandomStream& rng) {
  std::vector<int> heads;
  for (auto& node : world) {
    if (!node.alive) continue;
    if (!in_eligible_set(node, election_probability(kind, c, node.cls), round)) continue;
    const double threshold = threshold_for(node, kind, c, round);
    if (rng.uniform01() < threshold) {
      node.last_ch_round = round;
      heads.push_back(node.id);
    }
  }
  return heads;
}

bool sleep_decision(const RadioParams& p, double nearest_ch_dist, double bs_dist) {
  return tx_energy(p, p.packet_bits, nearest_ch_dist) > tx_energy(p, p.packet_bits, bs_dist);
}

WakeAction wake_or_continue(NodeState& node, bool this_round_is_ch, bool found_cheaper_ch) {
  if (this_round_is_ch) {
    node.sleep_rounds_remaining = 0;
    return WakeAction::WakeAsCH;
  }
  if (found_cheaper_ch) {
    node.sleep_rounds_remaining = 0;
    return WakeAction::WakeAsMember;
  }
  if (node.sleep_rounds_remaining <= 1) {
    node.sleep_rounds_remaining = 0;
    return WakeAction::WakeAndSendDirect;
  }
  --node.sleep_rounds_remaining;
  return WakeAction::KeepSleeping;
}

std::optional<int> select_relay(const NodeState& head, const std::vector<NodeState>& world,
                                const std::vector<int>& current_heads,
                                const std::vector<int>& asleep, Point bs_pos) {
  const double d_bs = distance(head.pos, bs_pos);
  int best = -1;
  double best_dist = std::numeric_limits<double>::infinity();
  for (const auto& cand : world) {
    if (!cand.alive || cand.cls == NodeClass::Normal) continue;
    if (std::binary_search(current_heads.begin(), current_heads.end(), cand.id)) continue;
    if (std::binary_search(asleep.begin(), asleep.end(), cand.id)) continue;
    const double d = distance(head.pos, cand.pos);
    if (d < d_bs && d < best_dist) {
      best = cand.id;
      best_dist = d;
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

RoundPlan plan_round(std::vector<NodeState>& world, ProtocolKind kind,
                     const HeterogeneityConfig& c, const RadioParams& radio, Point bs_pos,
                     std::int64_t round, int max_sleep_rounds, RandomStream& rng) {
  RoundPlan plan;
  plan.round_index = round;
  plan.cluster_heads = elect_cluster_heads(world, kind, c, round, rng);

  // Elected sleepers wake straight into head duty.
  for (int id : plan.cluster_heads) {
    assert(world[static_cast<std::size_t>(id)].id == id);
    if (world[static_cast<std::size_t>(id)].sleep_rounds_remaining > 0)
      wake_or_continue(world[static_cast<std::size_t>(id)], true, false);
  }

  const bool multihop = kind == ProtocolKind::MEECDA;
  const auto is_head = [&](int id) {
    return std::binary_search(plan.cluster_heads.begin(), plan.cluster_heads.end(), id);
  };
  const auto nearest_head = [&](const NodeState& node) {
    int best = -1;
    double best_dist = std::numeric_limits<double>::infinity();
    for (int id : plan.cluster_heads) {
      const double d = distance(node.pos, world[static_cast<std::size_t>(id)].pos);
      if (d < best_dist) {
        best = id;
        best_dist = d;
      }
    }
    return std::pair<int, double>(best, best_dist);
  };

  for (auto& node : world) {
    if (!node.alive || is_head(node.id)) continue;
    const auto [head, d_head] = nearest_head(node);
    const double d_bs = distance(node.pos, bs_pos);

    if (node.sleep_rounds_remaining > 0) {
      const bool cheaper = head >= 0 && tx_energy(radio, radio.packet_bits, d_head) <
                                            tx_energy(radio, radio.packet_bits, d_bs);
      switch (wake_or_continue(node, false, cheaper)) {
        case WakeAction::WakeAsMember:
          plan.memberships.emplace_back(node.id, head);
          break;
        case WakeAction::WakeAndSendDirect:
          plan.direct_senders.push_back(node.id);
          break;
        case WakeAction::KeepSleeping:
          plan.sleepers.push_back(node.id);
          break;
        case WakeAction::WakeAsCH:
          break;  // heads were resolved above
      }
      continue;
    }

    if (head < 0) {
      plan.direct_senders.push_back(node.id);
      continue;
    }
    if (multihop && max_sleep_rounds > 0 && sleep_decision(radio, d_head, d_bs)) {
      node.sleep_rounds_remaining = max_sleep_rounds;
      plan.sleepers.push_back(node.id);
      continue;
    }
    plan.memberships.emplace_back(node.id, head);
  }

  if (multihop) {
    for (int head_id : plan.cluster_heads) {
      const NodeState& head = world[static_cast<std::size_t>(head_id)];
      if (head.cls != NodeClass::Normal) continue;
      if (auto relay = select_relay(head, world, plan.cluster_heads, plan.sleepers, bs_pos))
        plan.relays.emplace_back(head_id, *relay);
    }
  }
  return plan;
}

}  // namespace meecda
