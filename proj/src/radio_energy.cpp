#include "radio_energy.hpp"

#include <cmath>
#include <stdexcept>

#include "errors.hpp"

namespace meecda {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

bool positive(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

void validate(const RadioParams& p) {
  if (!positive(p.e_elec)) throw ConfigError("e_elec must be a positive energy per bit");
  if (!positive(p.eps_fs)) throw ConfigError("eps_fs must be a positive amplifier coefficient");
  if (!positive(p.eps_mp)) throw ConfigError("eps_mp must be a positive amplifier coefficient");
  if (!positive(p.e_da)) throw ConfigError("e_da must be a positive aggregation energy");
  if (p.d0_override && !positive(*p.d0_override))
    throw ConfigError("d0_override must be a positive distance");
  if (p.packet_bits < 1) throw ConfigError("packet_bits must be >= 1");
}

double crossover_distance(const RadioParams& p) {
  if (p.d0_override) return *p.d0_override;
  return std::sqrt(p.eps_fs / p.eps_mp);
}

double tx_energy(const RadioParams& p, std::int64_t bits, double d) {
  if (bits < 0) throw std::invalid_argument("tx_energy: bit count must be nonnegative");
  if (!(d >= 0.0)) throw std::domain_error("tx_energy: distance must be nonnegative");
  const double b = static_cast<double>(bits);
  const double dd = d * d;
  if (d < crossover_distance(p)) return b * p.e_elec + b * p.eps_fs * dd;
  return b * p.e_elec + b * p.eps_mp * dd * dd;
}

double rx_energy(const RadioParams& p, std::int64_t bits) {
  if (bits < 0) throw std::invalid_argument("rx_energy: bit count must be nonnegative");
  return static_cast<double>(bits) * p.e_elec;
}

double ch_round_energy(const RadioParams& p, std::int64_t n, std::int64_t k, double d_bs) {
  if (k < 1) throw std::domain_error("ch_round_energy: cluster count must be >= 1");
  if (n < k) throw std::invalid_argument("ch_round_energy: node count must be >= cluster count");
  if (!(d_bs >= 0.0)) throw std::domain_error("ch_round_energy: distance must be nonnegative");
  const double members_per_cluster = static_cast<double>(n) / static_cast<double>(k);
  const double bits = static_cast<double>(p.packet_bits);
  return (members_per_cluster - 1.0) * bits * p.e_elec + members_per_cluster * bits * p.e_da +
         bits * p.e_elec + bits * p.eps_fs * d_bs * d_bs;
}

double non_ch_round_energy(const RadioParams& p, double d_ch) {
  if (!(d_ch >= 0.0)) throw std::domain_error("non_ch_round_energy: distance must be nonnegative");
  const double bits = static_cast<double>(p.packet_bits);
  return bits * p.e_elec + bits * p.eps_fs * d_ch * d_ch;
}

double total_round_energy(const RadioParams& p, std::int64_t n, std::int64_t k, double d_bs,
                          double d_ch) {
  if (k < 1) throw std::domain_error("total_round_energy: cluster count must be >= 1");
  const double bits = static_cast<double>(p.packet_bits);
  const double nd = static_cast<double>(n);
  const double kd = static_cast<double>(k);
  return bits * (2.0 * nd * p.e_elec + nd * p.e_da +
                 p.eps_fs * (kd * d_bs * d_bs + nd * d_ch * d_ch));
}

double optimal_cluster_count(const RadioParams& p, std::int64_t n, double area_side, double d_bs) {
  if (!(d_bs > 0.0)) throw std::domain_error("optimal_cluster_count: d_bs must be positive");
  return std::sqrt(static_cast<double>(n)) / std::sqrt(kTwoPi) * std::sqrt(p.eps_fs / p.eps_mp) *
         area_side / (d_bs * d_bs);
}

double optimal_probability(double k_opt, std::int64_t n) {
  if (n < 1) throw std::domain_error("optimal_probability: node count must be >= 1");
  const double p = k_opt / static_cast<double>(n);
  if (p < 0.0) return 0.0;
  if (p > 1.0) return 1.0;
  return p;
}

}  // namespace meecda
