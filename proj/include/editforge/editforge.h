/* C interface to the editforge pipeline.
 *
 * Every function returning ef_status leaves a description of the failure in
 * ef_last_error() (per thread). Strings returned through char** outputs are
 * owned by the caller and released with ef_string_free. */
#ifndef EDITFORGE_EDITFORGE_H
#define EDITFORGE_EDITFORGE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define EF_API __attribute__((visibility("default")))
#else
#define EF_API
#endif

typedef enum ef_status {
  EF_OK = 0,
  EF_CONFIG_ERROR = 1,
  EF_ILLEGAL_TRANSITION = 2,
  EF_TIMEOUT = 3,
  EF_EXHAUSTED = 4,
  EF_BAD_REQUEST = 5,
  EF_DECODE_ERROR = 6,
  EF_PARSE_ERROR = 7,
  EF_BIND_ERROR = 8,
  EF_NO_CANDIDATE_BLOCKS = 9,
  EF_UNROUTABLE = 10,
  EF_MANIFEST_CORRUPT = 11,
  EF_LENGTH_MISMATCH = 12,
  EF_EMPTY_INPUT = 13,
  EF_EXTRACTOR_ERROR = 14,
  EF_PROVIDER_ERROR = 15,
  EF_PRECONDITION_VIOLATION = 16,
  EF_IO_ERROR = 17,
  EF_INJECTED_FAULT = 18,
  EF_INTERNAL = 19
} ef_status;

typedef struct ef_pipeline ef_pipeline;
typedef struct ef_mock_server ef_mock_server;

EF_API const char* ef_version(void);
/* Message of the last failed call on this thread; "" when none. */
EF_API const char* ef_last_error(void);
EF_API const char* ef_status_name(ef_status status);
EF_API void ef_string_free(char* s);
/* "trace", "debug", "info", "warn", "error" or "off". Logs go to stderr. */
EF_API ef_status ef_set_log_level(const char* level);

/* config_path may be NULL for a default configuration rooted at the current
 * directory. overrides_json, if not NULL, is a JSON object whose keys replace
 * top-level configuration keys (e.g. {"seed":7,"offline":true}). */
EF_API ef_status ef_pipeline_open(const char* config_path, const char* overrides_json,
                                  ef_pipeline** out);
EF_API void ef_pipeline_close(ef_pipeline* p);

/* stage: ingest, expand, route, synthesize, verify, filter or stats.
 * args_json (nullable): {"src": DIR, "variants": N, "retry_failed": bool}.
 * report_json receives {stage, processed, succeeded, failed, skipped}. */
EF_API ef_status ef_run_stage(ef_pipeline* p, const char* stage, const char* args_json,
                              char** report_json);
/* Runs every stage in order; report_json receives {stages, kept, dropped, stats}. */
EF_API ef_status ef_run_all(ef_pipeline* p, const char* args_json, char** report_json);
/* format: "json" or "text". Recomputed from the work directory. */
EF_API ef_status ef_stats(ef_pipeline* p, const char* format, char** out);
/* Failed records grouped by stage and error class. */
EF_API ef_status ef_dead_letters(ef_pipeline* p, char** out_json);

/* Judge agreement between two score files (JSON array or JSON Lines of
 * {f,c,q[,triplet_id]} objects or [f,c,q] arrays). */
EF_API ef_status ef_consistency_files(const char* candidate_path, const char* reference_path,
                                      char** report_json);

/* Scripted mock model server. port 0 picks a free port. */
EF_API ef_status ef_mock_server_start(const char* script_path, const char* host, int port,
                                      ef_mock_server** out);
EF_API int ef_mock_server_port(const ef_mock_server* s);
EF_API void ef_mock_server_wait(ef_mock_server* s);
EF_API void ef_mock_server_stop(ef_mock_server* s);
EF_API void ef_mock_server_free(ef_mock_server* s);

EF_API ef_status ef_phash_file(const char* image_path, uint64_t* out);
/* reason receives NULL when accepted, else "short-side" or "aspect-ratio". */
EF_API ef_status ef_prefilter(uint32_t width, uint32_t height, int* accepted, const char** reason);

#ifdef __cplusplus
}
#endif

#endif
