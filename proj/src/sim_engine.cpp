#include "sim_engine.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "errors.hpp"

namespace meecda {

void validate_engine_config(const SimulationConfig& cfg) {
  validate(cfg.het);
  validate(cfg.radio);
  if (!(cfg.area_side > 0.0) || !std::isfinite(cfg.area_side))
    throw ConfigError("area_side must be > 0");
  if (!std::isfinite(cfg.bs_pos.x) || !std::isfinite(cfg.bs_pos.y))
    throw ConfigError("bs_x/bs_y must be finite");
  if (cfg.max_rounds < 0) throw ConfigError("max_rounds must be >= 0");
  if (cfg.max_sleep_rounds < 0) throw ConfigError("max_sleep_rounds must be >= 0");
}

std::string config_digest(const SimulationConfig& cfg) {
  char buf[640];
  std::snprintf(buf, sizeof buf,
                "n=%lld;m=%.17g;m0=%.17g;alpha=%.17g;beta=%.17g;e0=%.17g;p_opt=%.17g;"
                "e_elec=%.17g;eps_fs=%.17g;eps_mp=%.17g;e_da=%.17g;bits=%lld;d0=%.17g;"
                "area=%.17g;bs=%.17g,%.17g;rounds=%lld;seed=%llu;sleep=%d",
                static_cast<long long>(cfg.het.n), cfg.het.m, cfg.het.m0, cfg.het.alpha,
                cfg.het.beta, cfg.het.e0, cfg.het.p_opt, cfg.radio.e_elec, cfg.radio.eps_fs,
                cfg.radio.eps_mp, cfg.radio.e_da, static_cast<long long>(cfg.radio.packet_bits),
                cfg.radio.d0_override ? *cfg.radio.d0_override : -1.0, cfg.area_side,
                cfg.bs_pos.x, cfg.bs_pos.y, static_cast<long long>(cfg.max_rounds),
                static_cast<unsigned long long>(cfg.seed), cfg.max_sleep_rounds);
  return buf;
}

std::vector<NodeState> init_world(const SimulationConfig& cfg, RandomStream& rng) {
  const ClassCounts counts = class_counts(cfg.het);
  std::vector<NodeState> world;
  world.reserve(static_cast<std::size_t>(cfg.het.n));
  for (std::int64_t i = 0; i < cfg.het.n; ++i) {
    NodeState node;
    node.id = static_cast<int>(i);
    node.cls = i < counts.normal                    ? NodeClass::Normal
               : i < counts.normal + counts.advanced ? NodeClass::Advanced
                                                     : NodeClass::Super;
    node.pos.x = rng.uniform(0.0, cfg.area_side);
    node.pos.y = rng.uniform(0.0, cfg.area_side);
    node.energy = node.initial_energy = initial_energy(cfg.het, node.cls);
    world.push_back(node);
  }
  return world;
}

std::vector<NodeState> init_world(const SimulationConfig& cfg) {
  RandomStream rng(cfg.seed);
  return init_world(cfg, rng);
}

RoundOutcome run_round(std::vector<NodeState>& world, const SimulationConfig& cfg,
                       std::int64_t round, RandomStream& rng) {
  RoundOutcome out;
  out.round_index = round;
  out.plan = plan_round(world, cfg.protocol, cfg.het, cfg.radio, cfg.bs_pos, round,
                        cfg.max_sleep_rounds, rng);
  out.energy_spent.assign(world.size(), 0.0);

  std::vector<char> was_alive(world.size());
  for (std::size_t i = 0; i < world.size(); ++i) was_alive[i] = world[i].alive ? 1 : 0;

  const std::int64_t bits = cfg.radio.packet_bits;
  // Debits up to the node's remaining energy; a short payment means the
  // operation failed and the packet in flight is lost.
  const auto pay = [&](int id, double cost) {
    NodeState& node = world[static_cast<std::size_t>(id)];
    if (node.energy >= cost) {
      node.energy -= cost;
      out.energy_spent[static_cast<std::size_t>(id)] += cost;
      return true;
    }
    out.energy_spent[static_cast<std::size_t>(id)] += node.energy;
    node.energy = 0.0;
    return false;
  };
  const auto node_pos = [&](int id) { return world[static_cast<std::size_t>(id)].pos; };

  for (int id : out.plan.direct_senders)
    if (pay(id, tx_energy(cfg.radio, bits, distance(node_pos(id), cfg.bs_pos))))
      ++out.packets_to_bs;

  for (int head : out.plan.cluster_heads) {
    std::int64_t received = 0;
    for (const auto& [member, owner] : out.plan.memberships) {
      if (owner != head) continue;
      const bool sent = pay(member, tx_energy(cfg.radio, bits, distance(node_pos(member), node_pos(head))));
      if (sent && pay(head, rx_energy(cfg.radio, bits))) ++received;
    }
    // Aggregate the received signals plus the head's own reading.
    bool chain = pay(head, cfg.radio.e_da * static_cast<double>(bits) *
                               static_cast<double>(received + 1));
    if (!chain) continue;

    int relay = -1;
    for (const auto& [h, r] : out.plan.relays)
      if (h == head) relay = r;
    if (relay >= 0) {
      chain = pay(head, tx_energy(cfg.radio, bits, distance(node_pos(head), node_pos(relay)))) &&
              pay(relay, rx_energy(cfg.radio, bits)) &&
              pay(relay, tx_energy(cfg.radio, bits, distance(node_pos(relay), cfg.bs_pos)));
    } else {
      chain = pay(head, tx_energy(cfg.radio, bits, distance(node_pos(head), cfg.bs_pos)));
    }
    if (chain) ++out.packets_to_bs;
  }

  for (auto& node : world) {
    if (was_alive[static_cast<std::size_t>(node.id)] && node.energy <= 0.0) {
      node.alive = false;
      out.deaths.push_back(node.id);
    }
    out.total_residual += node.energy;
  }
  return out;
}

namespace {

bool any_alive(const std::vector<NodeState>& world) {
  return std::any_of(world.begin(), world.end(), [](const NodeState& n) { return n.alive; });
}

}  // namespace

MetricsTrace run_simulation(const SimulationConfig& cfg, const RoundObserver& observer) {
  validate_engine_config(cfg);
  RandomStream rng(cfg.seed);
  std::vector<NodeState> world = init_world(cfg, rng);

  MetricsTrace trace;
  trace.n_initial = cfg.het.n;
  trace.meta = TraceMeta{to_string(cfg.protocol), cfg.seed, config_digest(cfg)};

  std::int64_t packets_cum = 0;
  for (std::int64_t r = 0; r < cfg.max_rounds; ++r) {
    if (!any_alive(world)) break;
    const RoundOutcome outcome = run_round(world, cfg, r, rng);
    packets_cum += outcome.packets_to_bs;

    TraceRow row;
    row.round = r;
    for (const auto& node : world) {
      if (!node.alive) continue;
      if (node.cls == NodeClass::Normal) ++row.alive_normal;
      else if (node.cls == NodeClass::Advanced) ++row.alive_advanced;
      else ++row.alive_super;
    }
    row.ch_count = static_cast<std::int32_t>(outcome.plan.cluster_heads.size());
    row.sleeping = static_cast<std::int32_t>(outcome.plan.sleepers.size());
    row.packets_round = outcome.packets_to_bs;
    row.packets_cum = packets_cum;
    row.residual_j = outcome.total_residual;
    trace.rows.push_back(row);

    if (observer) observer(outcome, world);
  }
  trace.summary = summarize_rows(trace.rows, trace.n_initial);
  return trace;
}

MetricsTrace run_simulation(const SimulationConfig& cfg) { return run_simulation(cfg, {}); }

}  // namespace meecda
