#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "errors.hpp"
#include "heterogeneity.hpp"
#include "rng.hpp"
#include "test_util.hpp"

using meecda::HeterogeneityConfig;
using meecda::NodeClass;
using testutil::rel_close;

namespace {

const HeterogeneityConfig kCase1{100, 0.5, 0.4, 1.0, 2.0, 0.5, 0.1};
const HeterogeneityConfig kCase2{100, 0.5, 0.4, 1.5, 3.0, 0.5, 0.1};

}  // namespace

TEST_CASE("class counts round super first, then advanced, remainder normal") {
  const auto c1 = meecda::class_counts(kCase1);
  CHECK(c1.normal == 50);
  CHECK(c1.advanced == 30);
  CHECK(c1.super == 20);

  HeterogeneityConfig homogeneous = kCase1;
  homogeneous.m = 0.0;
  const auto h = meecda::class_counts(homogeneous);
  CHECK(h.normal == 100);
  CHECK(h.advanced == 0);
  CHECK(h.super == 0);

  HeterogeneityConfig small = kCase1;
  small.n = 10;
  const auto s = meecda::class_counts(small);
  CHECK(s.normal == 5);
  CHECK(s.advanced == 3);
  CHECK(s.super == 2);
}

TEST_CASE("class counts always sum to n") {
  meecda::RandomStream rng(21);
  for (int i = 0; i < 300; ++i) {
    HeterogeneityConfig c = kCase1;
    c.n = static_cast<std::int64_t>(rng.uniform(0.0, 500.0));
    c.m = rng.uniform01();
    c.m0 = rng.uniform01();
    const auto counts = meecda::class_counts(c);
    CHECK(counts.normal >= 0);
    CHECK(counts.advanced >= 0);
    CHECK(counts.super >= 0);
    CHECK(counts.normal + counts.advanced + counts.super == c.n);
  }
}

TEST_CASE("initial energy per class") {
  CHECK(rel_close(meecda::initial_energy(kCase1, NodeClass::Advanced), 1.0));
  CHECK(rel_close(meecda::initial_energy(kCase2, NodeClass::Super), 2.0));
  HeterogeneityConfig flat = kCase1;
  flat.alpha = flat.beta = 0.0;
  CHECK(meecda::initial_energy(flat, NodeClass::Normal) == flat.e0);
  CHECK(meecda::initial_energy(flat, NodeClass::Advanced) == flat.e0);
  CHECK(meecda::initial_energy(flat, NodeClass::Super) == flat.e0);
}

TEST_CASE("total initial energy") {
  CHECK(rel_close(meecda::total_initial_energy(kCase1), 85.0));
  CHECK(rel_close(meecda::total_initial_energy(kCase2), 102.5));
  HeterogeneityConfig homogeneous = kCase1;
  homogeneous.m = 0.0;
  CHECK(rel_close(meecda::total_initial_energy(homogeneous), 100.0 * 0.5));
}

TEST_CASE("total initial energy matches the per-node sum when counts are exact") {
  const auto counts = meecda::class_counts(kCase1);
  const double per_node_sum =
      static_cast<double>(counts.normal) * meecda::initial_energy(kCase1, NodeClass::Normal) +
      static_cast<double>(counts.advanced) * meecda::initial_energy(kCase1, NodeClass::Advanced) +
      static_cast<double>(counts.super) * meecda::initial_energy(kCase1, NodeClass::Super);
  CHECK(rel_close(meecda::total_initial_energy(kCase1), per_node_sum));
}

TEST_CASE("epoch length") {
  CHECK(meecda::epoch_length(kCase1) == 17);
  CHECK(meecda::epoch_length(kCase2) == 21);
  HeterogeneityConfig homogeneous = kCase1;
  homogeneous.m = 0.0;
  CHECK(meecda::epoch_length(homogeneous) == 10);
}

TEST_CASE("weighted probabilities") {
  CHECK(rel_close(meecda::weighted_probability(kCase1, NodeClass::Normal), 0.1 / 1.7));
  CHECK(rel_close(meecda::weighted_probability(kCase1, NodeClass::Advanced), 0.2 / 1.7));
  CHECK(rel_close(meecda::weighted_probability(kCase1, NodeClass::Super), 0.3 / 1.7));

  HeterogeneityConfig flat = kCase1;
  flat.alpha = flat.beta = 0.0;
  flat.m = 0.7;
  CHECK(rel_close(meecda::weighted_probability(flat, NodeClass::Normal), flat.p_opt));
  CHECK(rel_close(meecda::weighted_probability(flat, NodeClass::Advanced), flat.p_opt));
  CHECK(rel_close(meecda::weighted_probability(flat, NodeClass::Super), flat.p_opt));
}

TEST_CASE("weighted probabilities are monotone in class energy") {
  meecda::RandomStream rng(22);
  for (int i = 0; i < 200; ++i) {
    HeterogeneityConfig c = kCase1;
    c.alpha = rng.uniform(0.0, 3.0);
    c.beta = c.alpha + rng.uniform(0.0, 3.0);
    c.m = rng.uniform01();
    c.m0 = rng.uniform01();
    const double p_nrm = meecda::weighted_probability(c, NodeClass::Normal);
    const double p_adv = meecda::weighted_probability(c, NodeClass::Advanced);
    const double p_sup = meecda::weighted_probability(c, NodeClass::Super);
    CHECK(p_nrm <= p_adv);
    CHECK(p_adv <= p_sup);
  }
}

TEST_CASE("expected head count at full population equals n * p_opt") {
  const auto counts = meecda::class_counts(kCase1);
  const double expected =
      static_cast<double>(counts.normal) * meecda::weighted_probability(kCase1, NodeClass::Normal) +
      static_cast<double>(counts.advanced) * meecda::weighted_probability(kCase1, NodeClass::Advanced) +
      static_cast<double>(counts.super) * meecda::weighted_probability(kCase1, NodeClass::Super);
  CHECK(rel_close(expected, 100.0 * 0.1));
}

TEST_CASE("validation rejects bad populations") {
  HeterogeneityConfig bad = kCase1;
  bad.m = 1.5;
  CHECK_THROWS_AS(meecda::validate(bad), meecda::ConfigError);
  bad = kCase1;
  bad.beta = 0.5;  // below alpha
  CHECK_THROWS_AS(meecda::validate(bad), meecda::ConfigError);
  bad = kCase1;
  bad.e0 = 0.0;
  CHECK_THROWS_AS(meecda::validate(bad), meecda::ConfigError);
  bad = kCase1;
  bad.p_opt = 1.0;
  CHECK_THROWS_AS(meecda::validate(bad), meecda::ConfigError);
  CHECK_NOTHROW(meecda::validate(kCase1));
}

TEST_CASE("election probabilities reaching 1 are a configuration error") {
  HeterogeneityConfig bad = kCase1;
  bad.p_opt = 0.9;
  bad.m = 0.1;
  bad.alpha = 0.0;
  bad.beta = 9.0;  // p for super = 9.0 / 1.36
  CHECK_THROWS_AS(meecda::weighted_probability(bad, NodeClass::Super), meecda::ConfigError);
  CHECK_THROWS_AS(meecda::validate(bad), meecda::ConfigError);
}
