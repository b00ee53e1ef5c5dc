#include "meecda/meecda.h"

#include <cstring>
#include <stdexcept>
#include <string>

#include "errors.hpp"
#include "metrics.hpp"
#include "scenario.hpp"
#include "sim_engine.hpp"
#include "sweep.hpp"

struct meecda_scenario {
  meecda::Scenario rep;
};

struct meecda_trace {
  meecda::MetricsTrace rep;
};

namespace {

thread_local std::string t_last_error;

meecda_status fail(meecda_status status, const std::string& message) {
  t_last_error = message;
  return status;
}

template <typename Fn>
meecda_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const meecda::ConfigError& e) {
    return fail(MEECDA_ERR_INVALID_ARGUMENT, e.what());
  } catch (const meecda::ParseError& e) {
    return fail(MEECDA_ERR_PARSE, e.what());
  } catch (const meecda::IoError& e) {
    return fail(MEECDA_ERR_IO, e.what());
  } catch (const std::domain_error& e) {
    return fail(MEECDA_ERR_DOMAIN, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(MEECDA_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(MEECDA_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(MEECDA_ERR_INTERNAL, "unknown error");
  }
}

}  // namespace

extern "C" {

const char* meecda_version(void) { return "1.0.0"; }

const char* meecda_status_name(meecda_status status) {
  switch (status) {
    case MEECDA_OK: return "ok";
    case MEECDA_ERR_INVALID_ARGUMENT: return "invalid argument";
    case MEECDA_ERR_DOMAIN: return "domain error";
    case MEECDA_ERR_PARSE: return "parse error";
    case MEECDA_ERR_IO: return "io error";
    case MEECDA_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* meecda_last_error(void) { return t_last_error.c_str(); }

meecda_status meecda_scenario_create(const char* preset_name, meecda_scenario** out) {
  if (!preset_name || !out) return fail(MEECDA_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto* scenario = new meecda_scenario{meecda::scenario_preset(preset_name)};
    *out = scenario;
    return MEECDA_OK;
  });
}

meecda_status meecda_scenario_load_file(meecda_scenario* scenario, const char* path) {
  if (!scenario || !path) return fail(MEECDA_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    meecda::apply_json_file(scenario->rep, path);
    return MEECDA_OK;
  });
}

meecda_status meecda_scenario_set(meecda_scenario* scenario, const char* key, const char* value) {
  if (!scenario || !key || !value) return fail(MEECDA_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    meecda::set_value(scenario->rep, key, value);
    return MEECDA_OK;
  });
}

meecda_status meecda_scenario_get(const meecda_scenario* scenario, const char* key, char* buf,
                                  size_t buf_size) {
  if (!scenario || !key || !buf || buf_size == 0)
    return fail(MEECDA_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const std::string value = meecda::get_value(scenario->rep, key);
    if (value.size() + 1 > buf_size)
      return fail(MEECDA_ERR_INVALID_ARGUMENT,
                  "buffer too small for key '" + std::string(key) + "'");
    std::memcpy(buf, value.c_str(), value.size() + 1);
    return MEECDA_OK;
  });
}

void meecda_scenario_destroy(meecda_scenario* scenario) { delete scenario; }

meecda_status meecda_run(const meecda_scenario* scenario, meecda_trace** out_trace) {
  if (!scenario || !out_trace) return fail(MEECDA_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    meecda::validate(scenario->rep);
    auto* trace = new meecda_trace{meecda::run_simulation(scenario->rep.sim)};
    *out_trace = trace;
    return MEECDA_OK;
  });
}

meecda_status meecda_run_cell(const meecda_scenario* scenario, const char* protocol,
                              uint64_t seed, meecda_trace** out_trace) {
  if (!scenario || !protocol || !out_trace)
    return fail(MEECDA_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto kind = meecda::protocol_from_string(protocol);
    if (!kind)
      return fail(MEECDA_ERR_INVALID_ARGUMENT, "unknown protocol '" + std::string(protocol) + "'");
    meecda::validate(scenario->rep);
    meecda::SimulationConfig cfg = scenario->rep.sim;
    cfg.protocol = *kind;
    cfg.seed = seed;
    auto* trace = new meecda_trace{meecda::run_simulation(cfg)};
    *out_trace = trace;
    return MEECDA_OK;
  });
}

size_t meecda_trace_row_count(const meecda_trace* trace) {
  return trace ? trace->rep.rows.size() : 0;
}

meecda_status meecda_trace_row_at(const meecda_trace* trace, size_t index,
                                  meecda_trace_row* out_row) {
  if (!trace || !out_row) return fail(MEECDA_ERR_INVALID_ARGUMENT, "null argument");
  if (index >= trace->rep.rows.size())
    return fail(MEECDA_ERR_INVALID_ARGUMENT, "row index out of range");
  const auto& r = trace->rep.rows[index];
  *out_row = meecda_trace_row{r.round,    r.alive_normal,  r.alive_advanced,
                              r.alive_super, r.ch_count,   r.sleeping,
                              r.packets_round, r.packets_cum, r.residual_j};
  return MEECDA_OK;
}

meecda_status meecda_trace_get_summary(const meecda_trace* trace,
                                       meecda_trace_summary* out_summary) {
  if (!trace || !out_summary) return fail(MEECDA_ERR_INVALID_ARGUMENT, "null argument");
  const auto& s = trace->rep.summary;
  *out_summary = meecda_trace_summary{s.fnd, s.hnd, s.lnd, s.total_packets, s.rounds_simulated};
  return MEECDA_OK;
}

meecda_status meecda_trace_write_csv(const meecda_trace* trace, const char* path) {
  if (!trace || !path) return fail(MEECDA_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    meecda::export_csv_file(trace->rep, path);
    return MEECDA_OK;
  });
}

void meecda_trace_destroy(meecda_trace* trace) { delete trace; }

meecda_status meecda_compare(const meecda_scenario* scenario, const char* out_dir) {
  if (!scenario) return fail(MEECDA_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    meecda::run_compare_sweep(scenario->rep, out_dir ? out_dir : "");
    return MEECDA_OK;
  });
}

}  // extern "C"
