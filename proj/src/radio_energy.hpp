#pragma once

#include <cstdint>
#include <optional>

namespace meecda {

// First-order radio model: fixed electronics cost per bit on both ends, plus
// an amplifier term that follows a d^2 law below the crossover distance and a
// d^4 law at or beyond it. Every joule spent anywhere in the simulator flows
// through these functions.
struct RadioParams {
  double e_elec = 5e-9;        // transmitter/receiver electronics, J/bit
  double eps_fs = 10e-12;      // free-space amplifier, J/bit/m^2
  double eps_mp = 0.0013e-12;  // multipath amplifier, J/bit/m^4
  double e_da = 5e-9;          // aggregation cost, J/bit/signal
  std::optional<double> d0_override;  // forced crossover distance, m
  std::int64_t packet_bits = 4000;    // data message length L
};

void validate(const RadioParams& p);

// Amplifier-law switch point. Defaults to sqrt(eps_fs/eps_mp), where the two
// branches meet exactly; an override moves the switch and introduces a
// documented discontinuity.
double crossover_distance(const RadioParams& p);

// Energy to transmit `bits` over distance d.
double tx_energy(const RadioParams& p, std::int64_t bits, double d);

// Energy to receive `bits`.
double rx_energy(const RadioParams& p, std::int64_t bits);

// Analytical per-round budgets for n nodes grouped into k clusters, with the
// head d_bs away from the sink and members d_ch away from their head. These
// use the free-space amplifier term unconditionally and exist for planning
// and cross-checks; live accounting always goes through tx_energy/rx_energy.
double ch_round_energy(const RadioParams& p, std::int64_t n, std::int64_t k, double d_bs);
double non_ch_round_energy(const RadioParams& p, double d_ch);
double total_round_energy(const RadioParams& p, std::int64_t n, std::int64_t k, double d_bs,
                          double d_ch);

// Cluster count minimizing total_round_energy over a square field of the
// given side; returns the unrounded optimum.
double optimal_cluster_count(const RadioParams& p, std::int64_t n, double area_side, double d_bs);

// Election probability matching k_opt clusters among n nodes, clamped to [0, 1].
double optimal_probability(double k_opt, std::int64_t n);

}  // namespace meecda
