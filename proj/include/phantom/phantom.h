/* C interface to the phantom honeytoken library.
 *
 * Every function returning phantom_status leaves a thread-local message for
 * phantom_last_error() on failure. Strings returned through char** are owned
 * by the caller and released with phantom_string_free. Handles are released
 * with their matching *_free function; passing NULL to a free is a no-op. */
#ifndef PHANTOM_PHANTOM_H
#define PHANTOM_PHANTOM_H

#include <stddef.h>
#include <stdint.h>

#if defined(PHANTOM_BUILDING_LIBRARY)
#define PHANTOM_API __attribute__((visibility("default")))
#else
#define PHANTOM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum phantom_status {
  PHANTOM_OK = 0,
  PHANTOM_ERR_VALIDATION = 1,
  PHANTOM_ERR_IO = 2,
  PHANTOM_ERR_PARSE = 3,
  PHANTOM_ERR_INVALID_ARGUMENT = 4,
  PHANTOM_ERR_INTERNAL = 5
} phantom_status;

typedef struct phantom_profile phantom_profile;
typedef struct phantom_token phantom_token;
typedef struct phantom_config phantom_config;
typedef struct phantom_report phantom_report;

typedef struct phantom_scores {
  double s_v;
  double s_c;
  double s_n;
  double s_h;
  double b;
  int fooled;
} phantom_scores;

typedef struct phantom_scan_result {
  double pd1;
  double pd2;
  double pd3;
  double pd_combined;
  double dr;
} phantom_scan_result;

PHANTOM_API const char* phantom_version(void);
/* Message of the last failed call on this thread, "" if none. */
PHANTOM_API const char* phantom_last_error(void);
PHANTOM_API void phantom_string_free(char* s);

/* Profiles */
PHANTOM_API phantom_status phantom_profile_load_file(const char* path, phantom_profile** out);
PHANTOM_API phantom_status phantom_profile_parse(const char* document, phantom_profile** out);
/* Builtin key, sector or short name, case-insensitive. */
PHANTOM_API phantom_status phantom_profile_builtin(const char* name, phantom_profile** out);
PHANTOM_API size_t phantom_builtin_count(void);
/* Static string, NULL when index is out of range. */
PHANTOM_API const char* phantom_builtin_name(size_t index);
PHANTOM_API phantom_status phantom_profile_render(const phantom_profile* profile, char** out);
PHANTOM_API void phantom_profile_free(phantom_profile* profile);

/* Configuration */
PHANTOM_API phantom_status phantom_config_default(phantom_config** out);
PHANTOM_API phantom_status phantom_config_parse(const char* json, phantom_config** out);
PHANTOM_API phantom_status phantom_config_load_file(const char* path, phantom_config** out);
PHANTOM_API phantom_status phantom_config_render(const phantom_config* config, char** out);
PHANTOM_API uint64_t phantom_config_seed(const phantom_config* config);
PHANTOM_API phantom_status phantom_config_set_replicates(phantom_config* config, size_t replicates);
PHANTOM_API phantom_status phantom_config_set_threads(phantom_config* config, size_t threads);
PHANTOM_API void phantom_config_free(phantom_config* config);

/* Tokens. config may be NULL for defaults. */
PHANTOM_API phantom_status phantom_token_generate(const phantom_profile* profile, const char* type, const char* method,
                                                  uint64_t seed, const phantom_config* config, phantom_token** out);
PHANTOM_API phantom_status phantom_token_from_content(const char* type, const char* content, phantom_token** out);
/* Borrowed; valid until the token is freed. */
PHANTOM_API const char* phantom_token_content(const phantom_token* token);
/* Metadata plus content as a JSON object. */
PHANTOM_API phantom_status phantom_token_record_json(const phantom_token* token, char** out);
PHANTOM_API void phantom_token_free(phantom_token* token);

/* Scoring. config may be NULL. */
PHANTOM_API phantom_status phantom_score(const phantom_token* token, const phantom_profile* profile,
                                         const phantom_config* config, phantom_scores* out);
PHANTOM_API phantom_status phantom_score_json(const phantom_token* token, const phantom_profile* profile,
                                              const phantom_config* config, char** out);
/* weights: NULL or three scanner weights summing to 1. */
PHANTOM_API phantom_status phantom_scan(const phantom_token* token, const phantom_profile* profile,
                                        const phantom_config* config, const double* weights,
                                        phantom_scan_result* out);
PHANTOM_API phantom_status phantom_scan_json(const phantom_token* token, const phantom_profile* profile,
                                             const phantom_config* config, const double* weights, char** out);

/* Experiment and reports. format is "table", "json" or "csv". */
PHANTOM_API phantom_status phantom_experiment_run(uint64_t seed, const phantom_config* config, phantom_report** out);
PHANTOM_API phantom_status phantom_report_load_file(const char* path, phantom_report** out);
/* table or json only. */
PHANTOM_API phantom_status phantom_report_render(const phantom_report* report, const char* format, char** out);
/* csv writes one file per figure into the directory path. */
PHANTOM_API phantom_status phantom_report_write(const phantom_report* report, const char* format, const char* path);
PHANTOM_API size_t phantom_report_record_count(const phantom_report* report);
PHANTOM_API void phantom_report_free(phantom_report* report);

#ifdef __cplusplus
}
#endif

#endif
