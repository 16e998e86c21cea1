#ifndef SOFTCLUST_H
#define SOFTCLUST_H

/*
 * C interface to the softclust kernel: finite soft-set topologies with
 * soft ideals, the cluster-set operator, cluster topologies, law checking
 * and counterexample search.
 *
 * Conventions:
 *  - Every entry point returns an sc_status. SC_FOUND marks an expected
 *    negative outcome (a validation failure or a discovered
 *    counterexample); SC_ERR_* mark bad input or a resource cap. The
 *    values line up with the CLI exit codes.
 *  - Report strings are heap-allocated, UTF-8, newline-terminated where
 *    multi-line, and must be released with sc_string_free. On error the
 *    optional out_error string carries a message and out_report is null.
 *  - sc_space is an opaque handle to a parsed space file; release it with
 *    sc_space_free.
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sc_status {
  SC_OK = 0,
  SC_FOUND = 1,
  SC_ERR_INPUT = 2,
  SC_ERR_RESOURCE = 3
} sc_status;

typedef enum sc_format { SC_FORMAT_TEXT = 0, SC_FORMAT_JSON = 1 } sc_format;

typedef struct sc_space sc_space;

const char* sc_version(void);
void sc_string_free(char* s);
void sc_space_free(sc_space* space);

/* Comma-separated registry of law names, in canonical order. */
sc_status sc_law_names(char** out_csv);

sc_status sc_space_load(const char* path, sc_space** out_space, char** out_error);
sc_status sc_space_parse(const char* json_text, sc_space** out_space, char** out_error);

/* Canonical serialization of a loaded space. */
sc_status sc_space_serialize(const sc_space* space, char** out_text, char** out_error);

/* SC_OK when every stanza present in the file validated, SC_FOUND
 * otherwise; the report carries the verdicts and witnesses. */
sc_status sc_space_validate(const sc_space* space, sc_format format, char** out_report,
                            char** out_error);

/* Evaluates an operator expression over the space's named sets. */
sc_status sc_space_eval(const sc_space* space, const char* expression, char** out_result,
                        char** out_error);

/* Cluster topology of the space; lists members when list_members != 0,
 * otherwise reports the count. */
sc_status sc_cluster_topology(const sc_space* space, int list_members, sc_format format,
                              char** out_report, char** out_error);

/* kind: "crowded" | "regular" | "closed". */
sc_status sc_decompose(const sc_space* space, const char* set_name, const char* kind,
                       sc_format format, char** out_report, char** out_error);

/* Law suite runs. laws_csv selects a comma-separated subset; NULL or ""
 * runs the default selection (every law except prop4.9-stated). Returns
 * SC_FOUND when any selected law fails. */
sc_status sc_check_space(const sc_space* space, const char* laws_csv, sc_format format,
                         char** out_report, char** out_error);
sc_status sc_check_exhaustive(int max_cells, const char* laws_csv, sc_format format,
                              char** out_report, char** out_error);
sc_status sc_check_random(int cells, int trials, uint64_t seed, const char* laws_csv,
                          sc_format format, char** out_report, char** out_error);

/* Counterexample search for one law. SC_FOUND with the witness in the
 * report when a counterexample exists in the budget, SC_OK when the
 * search space is exhausted without one. */
sc_status sc_falsify_exhaustive(const char* law, int max_cells, sc_format format,
                                char** out_report, char** out_error);
sc_status sc_falsify_random(const char* law, int cells, int trials, uint64_t seed,
                            sc_format format, char** out_report, char** out_error);

/* Enumerates every (topology, principal ideal) pair on carriers with at
 * most max_cells cells; lists each space when list_members != 0. */
sc_status sc_enumerate(int max_cells, int list_members, sc_format format, char** out_report,
                       char** out_error);

#ifdef __cplusplus
}
#endif

#endif
