#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "errors.hpp"
#include "radio_energy.hpp"
#include "rng.hpp"
#include "test_util.hpp"

using meecda::RadioParams;
using testutil::rel_close;

namespace {

const RadioParams kDefaults{};  // reference constants: 5n/10p/0.0013p/5n, 4000 bits

}  // namespace

TEST_CASE("crossover distance follows the amplifier coefficients") {
  const double expected = std::sqrt(10e-12 / 0.0013e-12);
  CHECK(rel_close(meecda::crossover_distance(kDefaults), expected));
  CHECK(meecda::crossover_distance(kDefaults) == doctest::Approx(87.7058).epsilon(1e-5));

  RadioParams equal = kDefaults;
  equal.eps_mp = equal.eps_fs;
  CHECK(meecda::crossover_distance(equal) == 1.0);

  RadioParams forced = kDefaults;
  forced.d0_override = 70.0;
  CHECK(meecda::crossover_distance(forced) == 70.0);
}

TEST_CASE("transmit energy evaluates both amplifier branches") {
  CHECK(rel_close(meecda::tx_energy(kDefaults, 4000, 0.0), 2.0e-5));
  CHECK(rel_close(meecda::tx_energy(kDefaults, 4000, 50.0), 1.2e-4));   // free-space side
  CHECK(rel_close(meecda::tx_energy(kDefaults, 4000, 100.0), 5.4e-4));  // multipath side
  CHECK_THROWS_AS(meecda::tx_energy(kDefaults, 4000, -1.0), std::domain_error);
  CHECK_THROWS_AS(meecda::tx_energy(kDefaults, -1, 10.0), std::invalid_argument);
}

TEST_CASE("transmit energy is monotone in distance and bits") {
  meecda::RandomStream rng(11);
  for (int i = 0; i < 500; ++i) {
    const double d1 = rng.uniform(0.0, 150.0);
    const double d2 = d1 + rng.uniform(0.0, 50.0);
    CHECK(meecda::tx_energy(kDefaults, 4000, d1) <= meecda::tx_energy(kDefaults, 4000, d2));
    const std::int64_t b1 = static_cast<std::int64_t>(rng.uniform(0.0, 8000.0));
    const std::int64_t b2 = b1 + static_cast<std::int64_t>(rng.uniform(0.0, 4000.0));
    const double d = rng.uniform(0.0, 150.0);
    CHECK(meecda::tx_energy(kDefaults, b1, d) <= meecda::tx_energy(kDefaults, b2, d));
  }
}

TEST_CASE("amplifier branches meet at the computed crossover") {
  const double d0 = meecda::crossover_distance(kDefaults);
  const double bits = 4000.0;
  const double free_space = bits * kDefaults.e_elec + bits * kDefaults.eps_fs * d0 * d0;
  const double multipath = bits * kDefaults.e_elec + bits * kDefaults.eps_mp * d0 * d0 * d0 * d0;
  CHECK(rel_close(free_space, multipath));
  CHECK(rel_close(meecda::tx_energy(kDefaults, 4000, d0), multipath));
}

TEST_CASE("a forced crossover at 70 m introduces the documented jump") {
  RadioParams forced = kDefaults;
  forced.d0_override = 70.0;
  const double below = meecda::tx_energy(forced, 4000, std::nextafter(70.0, 0.0));
  const double at = meecda::tx_energy(forced, 4000, 70.0);
  CHECK(at < below);  // the d^4 branch undercuts d^2 below the natural crossover
}

TEST_CASE("transmitting always costs at least receiving") {
  meecda::RandomStream rng(12);
  for (int i = 0; i < 500; ++i) {
    const double d = rng.uniform(0.0, 200.0);
    CHECK(meecda::tx_energy(kDefaults, 4000, d) >= meecda::rx_energy(kDefaults, 4000));
  }
}

TEST_CASE("receive energy is electronics only") {
  CHECK(rel_close(meecda::rx_energy(kDefaults, 4000), 2.0e-5));
  CHECK(meecda::rx_energy(kDefaults, 0) == 0.0);
  CHECK(rel_close(meecda::rx_energy(kDefaults, 1), 5e-9));
}

TEST_CASE("per-round head budget") {
  CHECK(rel_close(meecda::ch_round_energy(kDefaults, 100, 10, 30.0), 4.36e-4));
  // single-node clusters at the sink: aggregation plus transmit electronics
  CHECK(rel_close(meecda::ch_round_energy(kDefaults, 5, 5, 0.0), 4.0e-5));
  CHECK(rel_close(meecda::ch_round_energy(kDefaults, 100, 10, 0.0), 4.0e-4));
  CHECK_THROWS_AS(meecda::ch_round_energy(kDefaults, 100, 0, 30.0), std::domain_error);
}

TEST_CASE("per-round member budget") {
  CHECK(rel_close(meecda::non_ch_round_energy(kDefaults, 20.0), 3.6e-5));
  CHECK(rel_close(meecda::non_ch_round_energy(kDefaults, 0.0), 2.0e-5));
  CHECK(rel_close(meecda::non_ch_round_energy(kDefaults, 30.0), 5.6e-5));
}

TEST_CASE("per-round network budget") {
  CHECK(rel_close(meecda::total_round_energy(kDefaults, 100, 10, 30.0, 20.0), 7.96e-3));
  const double electronics_only = 4000.0 * (2.0 * 100.0 * 5e-9 + 100.0 * 5e-9);
  CHECK(rel_close(meecda::total_round_energy(kDefaults, 100, 10, 0.0, 0.0), electronics_only));
}

TEST_CASE("network budget equals the sum of head and member budgets") {
  meecda::RandomStream rng(13);
  for (int i = 0; i < 200; ++i) {
    const std::int64_t k = 1 + static_cast<std::int64_t>(rng.uniform(0.0, 20.0));
    const std::int64_t n = k + static_cast<std::int64_t>(rng.uniform(0.0, 200.0));
    const double d_bs = rng.uniform(0.0, 80.0);
    const double d_ch = rng.uniform(0.0, 80.0);
    const double total = meecda::total_round_energy(kDefaults, n, k, d_bs, d_ch);
    const double composed = static_cast<double>(k) * meecda::ch_round_energy(kDefaults, n, k, d_bs) +
                            static_cast<double>(n) * meecda::non_ch_round_energy(kDefaults, d_ch);
    CHECK(rel_close(total, composed));
  }
}

TEST_CASE("network budget matches a brute-force sum over an idealized layout") {
  // k heads at d_bs with n/k-node clusters, n members at d_ch, free-space law.
  const std::int64_t n = 100, k = 10;
  const double d_bs = 30.0, d_ch = 20.0;
  const double bits = 4000.0, e_elec = 5e-9, eps_fs = 10e-12, e_da = 5e-9;
  double sum = 0.0;
  for (std::int64_t i = 0; i < k; ++i) {
    const double cluster = static_cast<double>(n) / static_cast<double>(k);
    sum += (cluster - 1.0) * bits * e_elec;           // receive from members
    sum += cluster * bits * e_da;                     // aggregate
    sum += bits * e_elec + bits * eps_fs * d_bs * d_bs;  // forward to the sink
  }
  for (std::int64_t i = 0; i < n; ++i) sum += bits * e_elec + bits * eps_fs * d_ch * d_ch;
  CHECK(rel_close(meecda::total_round_energy(kDefaults, n, k, d_bs, d_ch), sum));
}

TEST_CASE("optimal cluster count") {
  const double expected = std::sqrt(100.0) / std::sqrt(2.0 * std::acos(-1.0)) *
                          std::sqrt(10e-12 / 0.0013e-12) * 100.0 / (50.0 * 50.0);
  const double k_opt = meecda::optimal_cluster_count(kDefaults, 100, 100.0, 50.0);
  CHECK(rel_close(k_opt, expected));
  CHECK(k_opt == doctest::Approx(14.0).epsilon(0.01));
  CHECK(meecda::optimal_cluster_count(kDefaults, 0, 100.0, 50.0) == 0.0);
  CHECK(rel_close(meecda::optimal_cluster_count(kDefaults, 100, 100.0, 100.0), k_opt / 4.0));
  CHECK_THROWS_AS(meecda::optimal_cluster_count(kDefaults, 100, 100.0, 0.0), std::domain_error);
}

TEST_CASE("optimal probability") {
  CHECK(meecda::optimal_probability(10.0, 100) == 0.1);
  CHECK(meecda::optimal_probability(0.0, 100) == 0.0);
  CHECK(rel_close(meecda::optimal_probability(14.0, 100), 0.14));
  CHECK(meecda::optimal_probability(200.0, 100) == 1.0);
  CHECK_THROWS_AS(meecda::optimal_probability(10.0, 0), std::domain_error);
}

TEST_CASE("parameter validation rejects non-physical inputs") {
  RadioParams bad = kDefaults;
  bad.e_elec = 0.0;
  CHECK_THROWS_AS(meecda::validate(bad), meecda::ConfigError);
  bad = kDefaults;
  bad.packet_bits = 0;
  CHECK_THROWS_AS(meecda::validate(bad), meecda::ConfigError);
  bad = kDefaults;
  bad.d0_override = -5.0;
  CHECK_THROWS_AS(meecda::validate(bad), meecda::ConfigError);
  CHECK_NOTHROW(meecda::validate(kDefaults));
}
