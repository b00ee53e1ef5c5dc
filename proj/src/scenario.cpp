#include "scenario.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "errors.hpp"
#include "json.hpp"

namespace meecda {

namespace {

using nlohmann::json;

double require_number(const json& v, const std::string& key) {
  if (!v.is_number()) throw ConfigError("key '" + key + "' must be a number");
  return v.get<double>();
}

std::int64_t require_integer(const json& v, const std::string& key) {
  if (!v.is_number_integer()) throw ConfigError("key '" + key + "' must be an integer");
  return v.get<std::int64_t>();
}

std::uint64_t require_unsigned(const json& v, const std::string& key) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
    throw ConfigError("key '" + key + "' must be a nonnegative integer");
  return v.get<std::uint64_t>();
}

std::string require_string(const json& v, const std::string& key) {
  if (!v.is_string()) throw ConfigError("key '" + key + "' must be a string");
  return v.get<std::string>();
}

ProtocolKind require_protocol(const std::string& name, const std::string& key) {
  if (auto kind = protocol_from_string(name)) return *kind;
  throw ConfigError("key '" + key + "': unknown protocol '" + name +
                    "' (expected meecda, eecda-approx, or leach)");
}

void apply_key(Scenario& scn, const std::string& key, const json& v) {
  auto& sim = scn.sim;
  if (key == "nodes") sim.het.n = require_integer(v, key);
  else if (key == "m") sim.het.m = require_number(v, key);
  else if (key == "m0") sim.het.m0 = require_number(v, key);
  else if (key == "alpha") sim.het.alpha = require_number(v, key);
  else if (key == "beta") sim.het.beta = require_number(v, key);
  else if (key == "e0") sim.het.e0 = require_number(v, key);
  else if (key == "p_opt") sim.het.p_opt = require_number(v, key);
  else if (key == "e_elec") sim.radio.e_elec = require_number(v, key);
  else if (key == "eps_fs") sim.radio.eps_fs = require_number(v, key);
  else if (key == "eps_mp") sim.radio.eps_mp = require_number(v, key);
  else if (key == "e_da") sim.radio.e_da = require_number(v, key);
  else if (key == "packet_bits") sim.radio.packet_bits = require_integer(v, key);
  else if (key == "d0_override") {
    if (v.is_null()) sim.radio.d0_override.reset();
    else sim.radio.d0_override = require_number(v, key);
  } else if (key == "area_side") sim.area_side = require_number(v, key);
  else if (key == "bs_x") sim.bs_pos.x = require_number(v, key);
  else if (key == "bs_y") sim.bs_pos.y = require_number(v, key);
  else if (key == "max_rounds") sim.max_rounds = require_integer(v, key);
  else if (key == "max_sleep_rounds") sim.max_sleep_rounds = static_cast<int>(require_integer(v, key));
  else if (key == "protocol") sim.protocol = require_protocol(require_string(v, key), key);
  else if (key == "seed") sim.seed = require_unsigned(v, key);
  else if (key == "protocols") {
    if (!v.is_array()) throw ConfigError("key 'protocols' must be an array of strings");
    scn.protocols.clear();
    for (const auto& item : v) scn.protocols.push_back(require_protocol(require_string(item, key), key));
  } else if (key == "seeds") {
    if (!v.is_array()) throw ConfigError("key 'seeds' must be an array of integers");
    scn.seeds.clear();
    for (const auto& item : v) scn.seeds.push_back(require_unsigned(item, key));
  } else if (key == "seed_count") {
    const std::uint64_t count = require_unsigned(v, key);
    scn.seeds.clear();
    for (std::uint64_t s = 0; s < count; ++s) scn.seeds.push_back(s);
  } else if (key == "out_dir") scn.out_dir = require_string(v, key);
  else throw ConfigError("unknown scenario key '" + key + "'");
}

std::vector<std::string> split_csv_list(const std::string& value) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(value);
  while (std::getline(in, item, ',')) parts.push_back(item);
  return parts;
}

json value_to_json(const std::string& key, const std::string& value) {
  // String-typed keys pass through; everything else is parsed as a JSON scalar.
  if (key == "out_dir" || key == "protocol") return json(value);
  if (key == "protocols") {
    json arr = json::array();
    for (const auto& p : split_csv_list(value)) arr.push_back(p);
    return arr;
  }
  if (key == "seeds") {
    json arr = json::array();
    for (const auto& s : split_csv_list(value)) {
      std::uint64_t v = 0;
      const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || ptr != s.data() + s.size())
        throw ConfigError("key 'seeds': bad seed '" + s + "'");
      arr.push_back(v);
    }
    return arr;
  }
  if (key == "d0_override" && value == "none") return json(nullptr);
  const json parsed = json::parse(value, nullptr, false);
  if (parsed.is_discarded() || !(parsed.is_number() || parsed.is_null()))
    throw ConfigError("key '" + key + "': bad value '" + value + "'");
  return parsed;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

Scenario scenario_preset(const std::string& name) {
  Scenario scn;
  scn.sim.het = HeterogeneityConfig{100, 0.5, 0.4, 1.0, 2.0, 0.5, 0.1};
  scn.sim.radio = RadioParams{5e-9, 10e-12, 0.0013e-12, 5e-9, std::nullopt, 4000};
  scn.sim.area_side = 100.0;
  scn.sim.bs_pos = Point{50.0, 50.0};
  scn.sim.max_rounds = 20000;
  scn.sim.seed = 1;
  scn.sim.protocol = ProtocolKind::MEECDA;
  scn.sim.max_sleep_rounds = 8;
  scn.protocols = {ProtocolKind::MEECDA, ProtocolKind::EECDAApprox};
  scn.seeds.clear();
  for (std::uint64_t s = 0; s < 20; ++s) scn.seeds.push_back(s);
  scn.out_dir = "results";

  if (name == "case1") return scn;
  if (name == "case2") {
    scn.sim.het.alpha = 1.5;
    scn.sim.het.beta = 3.0;
    return scn;
  }
  throw ConfigError("unknown preset '" + name + "' (expected case1 or case2)");
}

void apply_json_text(Scenario& scn, const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("scenario file: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("scenario file: top level must be an object");
  for (const auto& [key, value] : doc.items()) apply_key(scn, key, value);
}

void apply_json_file(Scenario& scn, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open scenario file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  apply_json_text(scn, text.str());
}

void set_value(Scenario& scn, const std::string& key, const std::string& value) {
  apply_key(scn, key, value_to_json(key, value));
}

std::string get_value(const Scenario& scn, const std::string& key) {
  const auto& sim = scn.sim;
  if (key == "nodes") return std::to_string(sim.het.n);
  if (key == "m") return format_double(sim.het.m);
  if (key == "m0") return format_double(sim.het.m0);
  if (key == "alpha") return format_double(sim.het.alpha);
  if (key == "beta") return format_double(sim.het.beta);
  if (key == "e0") return format_double(sim.het.e0);
  if (key == "p_opt") return format_double(sim.het.p_opt);
  if (key == "e_elec") return format_double(sim.radio.e_elec);
  if (key == "eps_fs") return format_double(sim.radio.eps_fs);
  if (key == "eps_mp") return format_double(sim.radio.eps_mp);
  if (key == "e_da") return format_double(sim.radio.e_da);
  if (key == "packet_bits") return std::to_string(sim.radio.packet_bits);
  if (key == "d0_override")
    return sim.radio.d0_override ? format_double(*sim.radio.d0_override) : "none";
  if (key == "area_side") return format_double(sim.area_side);
  if (key == "bs_x") return format_double(sim.bs_pos.x);
  if (key == "bs_y") return format_double(sim.bs_pos.y);
  if (key == "max_rounds") return std::to_string(sim.max_rounds);
  if (key == "max_sleep_rounds") return std::to_string(sim.max_sleep_rounds);
  if (key == "protocol") return to_string(sim.protocol);
  if (key == "seed") return std::to_string(sim.seed);
  if (key == "out_dir") return scn.out_dir;
  if (key == "protocols") {
    std::string joined;
    for (const auto& p : scn.protocols) {
      if (!joined.empty()) joined += ',';
      joined += to_string(p);
    }
    return joined;
  }
  if (key == "seeds") {
    std::string joined;
    for (const auto& s : scn.seeds) {
      if (!joined.empty()) joined += ',';
      joined += std::to_string(s);
    }
    return joined;
  }
  throw ConfigError("unknown scenario key '" + key + "'");
}

void validate(const Scenario& scn) {
  validate_engine_config(scn.sim);
  if (scn.sim.max_rounds < 1) throw ConfigError("max_rounds must be >= 1");
  if (scn.out_dir.empty()) throw ConfigError("out_dir must not be empty");
}

}  // namespace meecda
