#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>

#include "doctest.h"
#include "errors.hpp"
#include "scenario.hpp"

using meecda::ConfigError;
using meecda::ProtocolKind;
using meecda::Scenario;

TEST_CASE("the case1 preset pins the reference parameters") {
  const Scenario scn = meecda::scenario_preset("case1");
  CHECK(scn.sim.het.n == 100);
  CHECK(scn.sim.het.m == 0.5);
  CHECK(scn.sim.het.m0 == 0.4);
  CHECK(scn.sim.het.alpha == 1.0);
  CHECK(scn.sim.het.beta == 2.0);
  CHECK(scn.sim.het.e0 == 0.5);
  CHECK(scn.sim.het.p_opt == 0.1);
  CHECK(scn.sim.radio.e_elec == 5e-9);
  CHECK(scn.sim.radio.eps_fs == 10e-12);
  CHECK(scn.sim.radio.eps_mp == 0.0013e-12);
  CHECK(scn.sim.radio.e_da == 5e-9);
  CHECK(scn.sim.radio.packet_bits == 4000);
  CHECK_FALSE(scn.sim.radio.d0_override.has_value());
  CHECK(scn.sim.area_side == 100.0);
  CHECK(scn.sim.bs_pos.x == 50.0);
  CHECK(scn.sim.bs_pos.y == 50.0);
  CHECK(scn.sim.max_rounds == 20000);
  CHECK(scn.sim.max_sleep_rounds == 8);
  CHECK(scn.sim.protocol == ProtocolKind::MEECDA);
  CHECK(scn.protocols ==
        std::vector<ProtocolKind>{ProtocolKind::MEECDA, ProtocolKind::EECDAApprox});
  CHECK(scn.seeds.size() == 20);
  CHECK_NOTHROW(meecda::validate(scn));
}

TEST_CASE("the case2 preset raises the energy multipliers") {
  const Scenario scn = meecda::scenario_preset("case2");
  CHECK(scn.sim.het.alpha == 1.5);
  CHECK(scn.sim.het.beta == 3.0);
  CHECK(scn.sim.het.m == 0.5);
}

TEST_CASE("unknown presets are rejected") {
  CHECK_THROWS_AS(meecda::scenario_preset("case9"), ConfigError);
}

TEST_CASE("scenario files overlay the preset") {
  Scenario scn = meecda::scenario_preset("case1");
  meecda::apply_json_text(scn, R"({
    "alpha": 2.5,
    "beta": 4.0,
    "seed": 9,
    "protocol": "leach",
    "protocols": ["meecda", "leach"],
    "seeds": [3, 5],
    "d0_override": 70.0,
    "out_dir": "elsewhere"
  })");
  CHECK(scn.sim.het.alpha == 2.5);
  CHECK(scn.sim.het.beta == 4.0);
  CHECK(scn.sim.seed == 9);
  CHECK(scn.sim.protocol == ProtocolKind::LeachStyle);
  CHECK(scn.protocols == std::vector<ProtocolKind>{ProtocolKind::MEECDA, ProtocolKind::LeachStyle});
  CHECK(scn.seeds == std::vector<std::uint64_t>{3, 5});
  CHECK(scn.sim.radio.d0_override == 70.0);
  CHECK(scn.out_dir == "elsewhere");
  // untouched keys keep their preset values
  CHECK(scn.sim.het.m == 0.5);
  CHECK(scn.sim.radio.packet_bits == 4000);
}

TEST_CASE("unknown keys are rejected by name") {
  Scenario scn = meecda::scenario_preset("case1");
  try {
    meecda::apply_json_text(scn, R"({"alpa": 1.0})");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("alpa") != std::string::npos);
  }
}

TEST_CASE("badly typed values are rejected by key") {
  Scenario scn = meecda::scenario_preset("case1");
  try {
    meecda::apply_json_text(scn, R"({"nodes": "many"})");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("nodes") != std::string::npos);
  }
  CHECK_THROWS_AS(meecda::apply_json_text(scn, "{not json"), meecda::ParseError);
}

TEST_CASE("null clears the crossover override") {
  Scenario scn = meecda::scenario_preset("case1");
  meecda::apply_json_text(scn, R"({"d0_override": 70.0})");
  CHECK(scn.sim.radio.d0_override.has_value());
  meecda::apply_json_text(scn, R"({"d0_override": null})");
  CHECK_FALSE(scn.sim.radio.d0_override.has_value());
}

TEST_CASE("seed_count expands to a seed range") {
  Scenario scn = meecda::scenario_preset("case1");
  meecda::apply_json_text(scn, R"({"seed_count": 3})");
  CHECK(scn.seeds == std::vector<std::uint64_t>{0, 1, 2});
}

TEST_CASE("textual overrides and readback") {
  Scenario scn = meecda::scenario_preset("case1");
  meecda::set_value(scn, "protocol", "eecda-approx");
  CHECK(scn.sim.protocol == ProtocolKind::EECDAApprox);
  meecda::set_value(scn, "seed", "42");
  CHECK(scn.sim.seed == 42);
  meecda::set_value(scn, "seeds", "3,5,9");
  CHECK(scn.seeds == std::vector<std::uint64_t>{3, 5, 9});
  meecda::set_value(scn, "protocols", "meecda,leach");
  CHECK(scn.protocols == std::vector<ProtocolKind>{ProtocolKind::MEECDA, ProtocolKind::LeachStyle});
  meecda::set_value(scn, "d0_override", "70");
  CHECK(scn.sim.radio.d0_override == 70.0);
  meecda::set_value(scn, "d0_override", "none");
  CHECK_FALSE(scn.sim.radio.d0_override.has_value());
  meecda::set_value(scn, "max_rounds", "500");
  CHECK(scn.sim.max_rounds == 500);

  CHECK(meecda::get_value(scn, "protocol") == "eecda-approx");
  CHECK(meecda::get_value(scn, "seed") == "42");
  CHECK(meecda::get_value(scn, "seeds") == "3,5,9");
  CHECK(meecda::get_value(scn, "d0_override") == "none");
  CHECK(meecda::get_value(scn, "out_dir") == "results");

  CHECK_THROWS_AS(meecda::set_value(scn, "bogus", "1"), ConfigError);
  CHECK_THROWS_AS(meecda::set_value(scn, "seed", "not-a-number"), ConfigError);
  CHECK_THROWS_AS(meecda::get_value(scn, "bogus"), ConfigError);
}

TEST_CASE("later layers win: preset, then file, then overrides") {
  Scenario scn = meecda::scenario_preset("case1");
  CHECK(scn.sim.seed == 1);
  meecda::apply_json_text(scn, R"({"seed": 5})");
  CHECK(scn.sim.seed == 5);
  meecda::set_value(scn, "seed", "7");
  CHECK(scn.sim.seed == 7);
}

TEST_CASE("validation names the offending key") {
  Scenario scn = meecda::scenario_preset("case1");
  scn.sim.max_rounds = 0;
  try {
    meecda::validate(scn);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("max_rounds") != std::string::npos);
  }
  scn = meecda::scenario_preset("case1");
  scn.sim.het.m = 1.5;
  try {
    meecda::validate(scn);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("m ") != std::string::npos);
  }
}
