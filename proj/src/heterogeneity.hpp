#pragma once

#include <cstdint>

namespace meecda {

enum class NodeClass { Normal, Advanced, Super };

const char* to_string(NodeClass c);

// Three-class population. A fraction m of the n nodes carry extra energy; of
// those, a fraction m0 are super. Normal nodes start at e0, advanced nodes at
// e0*(1+alpha), super nodes at e0*(1+beta).
struct HeterogeneityConfig {
  std::int64_t n = 100;
  double m = 0.5;
  double m0 = 0.4;
  double alpha = 1.0;
  double beta = 2.0;
  double e0 = 0.5;  // J
  double p_opt = 0.1;
};

struct ClassCounts {
  std::int64_t normal = 0;
  std::int64_t advanced = 0;
  std::int64_t super = 0;
};

void validate(const HeterogeneityConfig& c);

// Rounds fractional populations half-up on super first, then advanced; the
// remainder is normal, so the three counts always sum to n.
ClassCounts class_counts(const HeterogeneityConfig& c);

double initial_energy(const HeterogeneityConfig& c, NodeClass k);

// 1 + m*(alpha + m0*(beta - alpha)): total energy of the population relative
// to an all-normal one of the same size.
double heterogeneity_factor(const HeterogeneityConfig& c);

double total_initial_energy(const HeterogeneityConfig& c);

// Rounds of the rotation cycle, scaled up by the heterogeneity factor.
std::int64_t epoch_length(const HeterogeneityConfig& c);

// Per-class election probability; classes with more initial energy elect
// proportionally more often while the expected head count stays n*p_opt.
double weighted_probability(const HeterogeneityConfig& c, NodeClass k);

}  // namespace meecda
