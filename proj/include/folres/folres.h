#ifndef FOLRES_H
#define FOLRES_H

#include <stdint.h>

#if defined(_WIN32)
#define FOLRES_API __declspec(dllexport)
#else
#define FOLRES_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes double as process exit codes. */
typedef enum {
    FOLRES_OK = 0,
    FOLRES_INPUT_ERROR = 1,
    FOLRES_INTERNAL_ERROR = 2,
    FOLRES_BUDGET_EXCEEDED = 3
} folres_status;

typedef struct folres_session folres_session;
typedef struct folres_report folres_report;

FOLRES_API const char* folres_version(void);
FOLRES_API const char* folres_status_name(folres_status status);

FOLRES_API folres_session* folres_session_create(void);
FOLRES_API void folres_session_destroy(folres_session* session);

/* Overrides for the values given in the input document. */
FOLRES_API folres_status folres_session_set_seed(folres_session* session, uint64_t seed);
FOLRES_API folres_status folres_session_set_max_depth(folres_session* session, int max_depth);
FOLRES_API folres_status folres_session_set_timing(folres_session* session, int enabled);

/* Number of commands and their names, for usage messages. */
FOLRES_API int folres_command_count(void);
FOLRES_API const char* folres_command_name(int i);

/*
 * Runs one command on a JSON input document (NULL means "{}").  On return
 * *report is always set, even on error, and must be released with
 * folres_report_destroy.  The status is FOLRES_OK when the command computed a
 * verdict, whatever the verdict is.
 */
FOLRES_API folres_status folres_run(folres_session* session, const char* command, const char* input_json,
                                    folres_report** report);

/* Convenience: "P=...,Q=..." over (x, y) as the input's field. */
FOLRES_API folres_status folres_run_field(folres_session* session, const char* command, const char* field_spec,
                                          folres_report** report);

FOLRES_API folres_status folres_report_status(const folres_report* report);
/* Pretty-printed report; owned by the report. */
FOLRES_API const char* folres_report_json(const folres_report* report);
/* DOT text of the divisor graph, or "" when the command has none. */
FOLRES_API const char* folres_report_dot(const folres_report* report);
/* Error code name such as "SyntaxError", or "" on success. */
FOLRES_API const char* folres_report_error_code(const folres_report* report);
FOLRES_API void folres_report_destroy(folres_report* report);

#ifdef __cplusplus
}
#endif

#endif
