/*
 * meecda — round-based simulator for three-level heterogeneous wireless
 * sensor networks (multihop clustering with data aggregation, plus two
 * baseline protocols).
 *
 * C interface over the shared library: opaque handles, status codes, and a
 * thread-local error message. All functions are safe to call from multiple
 * threads as long as a given handle is used by one thread at a time.
 */
#ifndef MEECDA_H
#define MEECDA_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define MEECDA_API __declspec(dllexport)
#elif defined(__GNUC__)
#define MEECDA_API __attribute__((visibility("default")))
#else
#define MEECDA_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum meecda_status {
  MEECDA_OK = 0,
  MEECDA_ERR_INVALID_ARGUMENT = 1, /* bad handle, key, value, or configuration */
  MEECDA_ERR_DOMAIN = 2,           /* argument outside a function's domain */
  MEECDA_ERR_PARSE = 3,            /* malformed scenario file or trace csv */
  MEECDA_ERR_IO = 4,               /* filesystem failure */
  MEECDA_ERR_INTERNAL = 5
} meecda_status;

/* A simulation setup plus the protocol/seed sweep lists a comparison runs
 * over. Created from a preset, then optionally overlaid with a scenario file
 * and key overrides (later layers win). */
typedef struct meecda_scenario meecda_scenario;

/* Per-round trace of one finished simulation. */
typedef struct meecda_trace meecda_trace;

typedef struct meecda_trace_row {
  int64_t round;
  int32_t alive_normal;
  int32_t alive_advanced;
  int32_t alive_super;
  int32_t ch_count;
  int32_t sleeping;
  int64_t packets_round;
  int64_t packets_cum;
  double residual_j;
} meecda_trace_row;

/* Round indices are -1 when the event never happened within the horizon. */
typedef struct meecda_trace_summary {
  int64_t first_death_round;
  int64_t half_death_round;
  int64_t last_death_round;
  int64_t total_packets;
  int64_t rounds_simulated;
} meecda_trace_summary;

MEECDA_API const char* meecda_version(void);
MEECDA_API const char* meecda_status_name(meecda_status status);

/* Message for the most recent failure on this thread; never NULL. */
MEECDA_API const char* meecda_last_error(void);

/* preset_name is "case1" or "case2". */
MEECDA_API meecda_status meecda_scenario_create(const char* preset_name, meecda_scenario** out);

/* Overlays a JSON scenario file; unknown keys are rejected. */
MEECDA_API meecda_status meecda_scenario_load_file(meecda_scenario* scenario, const char* path);

/* Single key override, textual value. Keys: nodes, m, m0, alpha, beta, e0,
 * p_opt, e_elec, eps_fs, eps_mp, e_da, packet_bits, d0_override, area_side,
 * bs_x, bs_y, max_rounds, max_sleep_rounds, protocol, seed, seed_count,
 * protocols, seeds, out_dir. */
MEECDA_API meecda_status meecda_scenario_set(meecda_scenario* scenario, const char* key,
                                             const char* value);

/* Textual form of a key's current value, NUL-terminated into buf. */
MEECDA_API meecda_status meecda_scenario_get(const meecda_scenario* scenario, const char* key,
                                             char* buf, size_t buf_size);

MEECDA_API void meecda_scenario_destroy(meecda_scenario* scenario);

/* Runs one simulation with the scenario's protocol and seed. */
MEECDA_API meecda_status meecda_run(const meecda_scenario* scenario, meecda_trace** out_trace);

/* Same, overriding protocol ("meecda" | "eecda-approx" | "leach") and seed. */
MEECDA_API meecda_status meecda_run_cell(const meecda_scenario* scenario, const char* protocol,
                                         uint64_t seed, meecda_trace** out_trace);

MEECDA_API size_t meecda_trace_row_count(const meecda_trace* trace);
MEECDA_API meecda_status meecda_trace_row_at(const meecda_trace* trace, size_t index,
                                             meecda_trace_row* out_row);
MEECDA_API meecda_status meecda_trace_get_summary(const meecda_trace* trace,
                                                  meecda_trace_summary* out_summary);

/* Writes the per-round CSV (fixed header, one line per round); output is
 * byte-identical across runs of the same configuration and seed. */
MEECDA_API meecda_status meecda_trace_write_csv(const meecda_trace* trace, const char* path);

MEECDA_API void meecda_trace_destroy(meecda_trace* trace);

/* Runs every protocol x seed cell of the scenario (at least two protocols and
 * one seed required), writing per-cell traces, aggregate plot data, and
 * report.txt under out_dir (NULL uses the scenario's out_dir). */
MEECDA_API meecda_status meecda_compare(const meecda_scenario* scenario, const char* out_dir);

#ifdef __cplusplus
}
#endif

#endif /* MEECDA_H */
