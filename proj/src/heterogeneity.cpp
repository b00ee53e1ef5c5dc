#include "heterogeneity.hpp"

#include <cmath>

#include "errors.hpp"

namespace meecda {

const char* to_string(NodeClass c) {
  switch (c) {
    case NodeClass::Normal: return "normal";
    case NodeClass::Advanced: return "advanced";
    case NodeClass::Super: return "super";
  }
  return "?";
}

void validate(const HeterogeneityConfig& c) {
  if (c.n < 0) throw ConfigError("nodes must be >= 0");
  if (!(c.m >= 0.0 && c.m <= 1.0)) throw ConfigError("m must be within [0, 1]");
  if (!(c.m0 >= 0.0 && c.m0 <= 1.0)) throw ConfigError("m0 must be within [0, 1]");
  if (!(c.alpha >= 0.0) || !std::isfinite(c.alpha)) throw ConfigError("alpha must be >= 0");
  if (!(c.beta >= c.alpha) || !std::isfinite(c.beta)) throw ConfigError("beta must be >= alpha");
  if (!(c.e0 > 0.0) || !std::isfinite(c.e0)) throw ConfigError("e0 must be > 0");
  if (!(c.p_opt > 0.0 && c.p_opt < 1.0)) throw ConfigError("p_opt must be within (0, 1)");
  // Surfaces invalid weighted probabilities early.
  weighted_probability(c, NodeClass::Normal);
  weighted_probability(c, NodeClass::Advanced);
  weighted_probability(c, NodeClass::Super);
}

ClassCounts class_counts(const HeterogeneityConfig& c) {
  const double nd = static_cast<double>(c.n);
  const std::int64_t super = std::llround(nd * c.m * c.m0);
  const std::int64_t heterogeneous = std::llround(nd * c.m);
  const std::int64_t advanced = heterogeneous - super;
  const std::int64_t normal = c.n - heterogeneous;
  if (super < 0 || advanced < 0 || normal < 0)
    throw ConfigError("class fractions m/m0 produce a negative class count");
  return ClassCounts{normal, advanced, super};
}

double initial_energy(const HeterogeneityConfig& c, NodeClass k) {
  switch (k) {
    case NodeClass::Normal: return c.e0;
    case NodeClass::Advanced: return c.e0 * (1.0 + c.alpha);
    case NodeClass::Super: return c.e0 * (1.0 + c.beta);
  }
  return c.e0;
}

double heterogeneity_factor(const HeterogeneityConfig& c) {
  return 1.0 + c.m * (c.alpha + c.m0 * (c.beta - c.alpha));
}

double total_initial_energy(const HeterogeneityConfig& c) {
  return static_cast<double>(c.n) * c.e0 * heterogeneity_factor(c);
}

std::int64_t epoch_length(const HeterogeneityConfig& c) {
  return std::llround(1.0 / c.p_opt * heterogeneity_factor(c));
}

double weighted_probability(const HeterogeneityConfig& c, NodeClass k) {
  double multiplier = 1.0;
  if (k == NodeClass::Advanced) multiplier = 1.0 + c.alpha;
  if (k == NodeClass::Super) multiplier = 1.0 + c.beta;
  const double p = c.p_opt * multiplier / heterogeneity_factor(c);
  if (p >= 1.0)
    throw ConfigError(std::string("election probability for ") + to_string(k) +
                      " nodes reaches 1; lower p_opt or the energy multipliers");
  return p;
}

}  // namespace meecda
