#ifndef ALTSUM_ALTSUM_H
#define ALTSUM_ALTSUM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(ALTSUM_BUILDING_LIBRARY)
#define ALTSUM_API __declspec(dllexport)
#else
#define ALTSUM_API __declspec(dllimport)
#endif
#else
#define ALTSUM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes 0-3 coincide with the command-line exit codes. */
typedef enum altsum_status {
    ALTSUM_OK = 0,
    ALTSUM_CHECK_FAILED = 1,
    ALTSUM_ERR_INPUT = 2,
    ALTSUM_ERR_BUDGET = 3,
    ALTSUM_ERR_INVALID_ARGUMENT = 4,
    ALTSUM_ERR_INTERNAL = 5
} altsum_status;

typedef enum altsum_format { ALTSUM_FORMAT_TEXT = 0, ALTSUM_FORMAT_JSON = 1 } altsum_format;

typedef enum altsum_kind {
    ALTSUM_KIND_MATRIX_TUPLE = 0,
    ALTSUM_KIND_COLORFUL = 1,
    ALTSUM_KIND_SPINOR = 2
} altsum_kind;

typedef struct altsum_config altsum_config;
typedef struct altsum_instance altsum_instance;
typedef struct altsum_report altsum_report;

ALTSUM_API const char* altsum_version(void);
ALTSUM_API const char* altsum_status_string(altsum_status status);
/* Message of the last failed call on this thread; "" if none. */
ALTSUM_API const char* altsum_last_error(void);
/* Frees strings returned through out-parameters. */
ALTSUM_API void altsum_string_free(char* text);

/* Run configuration. Defaults: one thread, term budget 1e8, node cap 1e7, seed 0. */
ALTSUM_API altsum_status altsum_config_create(altsum_config** out);
ALTSUM_API void altsum_config_destroy(altsum_config* config);
/* Command names: verify-general, invariant, alon-tarsi, verify-onn,
   rota-search, verify-svrtan, svrtan-search, census. */
ALTSUM_API altsum_status altsum_config_set_command(altsum_config* config, const char* command);
ALTSUM_API altsum_status altsum_config_set_n(altsum_config* config, size_t n);
ALTSUM_API altsum_status altsum_config_set_seed(altsum_config* config, uint64_t seed);
ALTSUM_API altsum_status altsum_config_set_shape(altsum_config* config, const size_t* sizes, size_t count);
/* "dense", "colorful" or "svrtan". */
ALTSUM_API altsum_status altsum_config_set_form(altsum_config* config, const char* form);
ALTSUM_API altsum_status altsum_config_set_threads(altsum_config* config, size_t threads);
ALTSUM_API altsum_status altsum_config_set_term_budget(altsum_config* config, uint64_t budget);
ALTSUM_API altsum_status altsum_config_set_node_cap(altsum_config* config, uint64_t cap);
ALTSUM_API altsum_status altsum_config_set_incremental(altsum_config* config, int enabled);
ALTSUM_API altsum_status altsum_config_set_timing(altsum_config* config, int enabled);

/* Instances. */
ALTSUM_API altsum_status altsum_instance_parse(const char* json_text, altsum_instance** out);
/* Colorful or spinor instance of order n. */
ALTSUM_API altsum_status altsum_instance_random(altsum_kind kind, size_t n, uint64_t seed, altsum_instance** out);
/* Matrix tuple of the given shape with a dense form. */
ALTSUM_API altsum_status altsum_instance_random_tuple(const size_t* sizes, size_t count, uint64_t seed,
                                                      altsum_instance** out);
ALTSUM_API altsum_status altsum_instance_to_json(const altsum_instance* instance, char** out);
ALTSUM_API altsum_kind altsum_instance_kind(const altsum_instance* instance);
ALTSUM_API void altsum_instance_destroy(altsum_instance* instance);

/* Runs the configured command; instance may be NULL. On ALTSUM_OK *out holds
   a report whose exit code says whether the check passed. */
ALTSUM_API altsum_status altsum_run(const altsum_config* config, const altsum_instance* instance,
                                    altsum_report** out);
ALTSUM_API int altsum_report_exit_code(const altsum_report* report);
ALTSUM_API int altsum_report_verdict(const altsum_report* report);
ALTSUM_API altsum_status altsum_report_render(const altsum_report* report, altsum_format format, char** out);
ALTSUM_API void altsum_report_destroy(altsum_report* report);

#ifdef __cplusplus
}
#endif

#endif /* ALTSUM_ALTSUM_H */
