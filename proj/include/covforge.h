/* C interface to the covforge verification engine.
 *
 * Every function that can fail returns a covforge_status; on failure the
 * message is available from covforge_last_error() on the same thread until
 * the next failing call. Strings returned through char** are owned by the
 * caller and released with covforge_string_free. Strings returned directly
 * as const char* are owned by the handle they came from.
 */
#ifndef COVFORGE_H
#define COVFORGE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define COVFORGE_API __declspec(dllexport)
#else
#define COVFORGE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum covforge_status {
  COVFORGE_OK = 0,
  COVFORGE_USAGE = 2,            /* unknown check filter, bad tolerance, malformed rational */
  COVFORGE_INVALID_ARGUMENT = 3, /* null handle or out-of-range index */
  COVFORGE_INTERNAL = 4
} covforge_status;

typedef enum covforge_check_status {
  COVFORGE_CHECK_PASS = 0,
  COVFORGE_CHECK_FAIL = 1,
  COVFORGE_CHECK_SKIPPED = 2
} covforge_check_status;

typedef struct covforge_config covforge_config;
typedef struct covforge_report covforge_report;

COVFORGE_API const char* covforge_version(void);
COVFORGE_API const char* covforge_last_error(void);
COVFORGE_API void covforge_string_free(char* s);

/* Defaults: filter "*", seed 42, text format, one job, timing on,
 * r = (10, 1/2, 1/3), eps = 1, tolerances as in covforge_constants_json. */
COVFORGE_API covforge_status covforge_config_new(covforge_config** out);
COVFORGE_API void covforge_config_free(covforge_config* cfg);
/* Comma-separated globs over check ids, e.g. "symbolic/strata,numeric/fiber_zero". */
COVFORGE_API covforge_status covforge_config_set_filter(covforge_config* cfg, const char* filter);
COVFORGE_API covforge_status covforge_config_set_seed(covforge_config* cfg, uint64_t seed);
/* "text" or "json". */
COVFORGE_API covforge_status covforge_config_set_format(covforge_config* cfg, const char* format);
/* Checks run concurrently on `jobs` threads; each path tracker uses `track_jobs`. */
COVFORGE_API covforge_status covforge_config_set_jobs(covforge_config* cfg, unsigned jobs, unsigned track_jobs);
/* name is one of track, dedup, rank, cluster, support, simple. */
COVFORGE_API covforge_status covforge_config_set_tolerance(covforge_config* cfg, const char* name, double value);
/* Rationals as text, e.g. "10", "1/2", "1/3". */
COVFORGE_API covforge_status covforge_config_set_sample_r(covforge_config* cfg, const char* r1, const char* r2,
                                                          const char* r3);
COVFORGE_API covforge_status covforge_config_set_eps(covforge_config* cfg, double eps);
COVFORGE_API covforge_status covforge_config_set_timing(covforge_config* cfg, int enabled);
COVFORGE_API covforge_status covforge_config_set_verbose(covforge_config* cfg, int enabled);

COVFORGE_API size_t covforge_check_count(void);
/* NULL when index is out of range. */
COVFORGE_API const char* covforge_check_id(size_t index);

/* Runs the selected checks. Failing checks still yield COVFORGE_OK; inspect
 * the report. A filter that matches nothing yields COVFORGE_USAGE. */
COVFORGE_API covforge_status covforge_run(const covforge_config* cfg, covforge_report** out);
COVFORGE_API void covforge_report_free(covforge_report* report);
/* 0 when every selected check passed, 1 otherwise, matching the CLI. */
COVFORGE_API int covforge_report_exit_code(const covforge_report* report);
COVFORGE_API size_t covforge_report_size(const covforge_report* report);
COVFORGE_API const char* covforge_report_check_id(const covforge_report* report, size_t index);
COVFORGE_API covforge_status covforge_report_check_status(const covforge_report* report, size_t index,
                                                          covforge_check_status* out);
/* The report in the configured format. Owned by the report. */
COVFORGE_API const char* covforge_report_render(const covforge_report* report);

/* The erratum ledger and the calibrated constants as JSON. */
COVFORGE_API covforge_status covforge_errata_json(char** out);
COVFORGE_API covforge_status covforge_constants_json(char** out);

#ifdef __cplusplus
}
#endif

#endif /* COVFORGE_H */
