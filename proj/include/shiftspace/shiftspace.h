/* shiftspace: symbolic dynamics of shift spaces and their induced
 * hyperspace maps, behind a C interface.
 *
 * Conventions:
 *   - every fallible call returns shs_status; on failure the thread-local
 *     message from shs_last_error() describes the problem;
 *   - objects are opaque handles released with their _free function;
 *   - strings returned through char** are heap-allocated and released with
 *     shs_string_free;
 *   - reports are canonical JSON: sorted keys, rationals as "p"/"p/q"
 *     strings, never floating point, byte-identical for equal inputs.
 */
#ifndef SHIFTSPACE_H
#define SHIFTSPACE_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum shs_status {
  SHS_OK = 0,
  SHS_ERR_DOMAIN = 1, /* invalid input or violated precondition */
  SHS_ERR_USAGE = 2   /* malformed call (null argument, bad flag value) */
} shs_status;

typedef struct shs_matrix shs_matrix; /* boolean transition matrix */
typedef struct shs_set shs_set;       /* finite set of symbol streams */

const char* shs_version(void);
const char* shs_last_error(void);
void shs_string_free(char* s);

/* --- transition matrices ------------------------------------------------ */

/* Text format: one row per line, 0/1 entries separated by single spaces. */
shs_status shs_matrix_parse(const char* text, shs_matrix** out);
shs_status shs_matrix_read_file(const char* path, shs_matrix** out);
void shs_matrix_free(shs_matrix* m);
size_t shs_matrix_dim(const shs_matrix* m);
shs_status shs_matrix_format(const shs_matrix* m, char** text_out);

/* Boolean Kronecker power of dimension n^k (capped, see SHIFTSPACE_KRON_CAP). */
shs_status shs_matrix_kron_power(const shs_matrix* m, int k, shs_matrix** out);

/* Dynamics flags of the vertex shift and its induced hyperspace map. */
shs_status shs_classify_json(const shs_matrix* m, char** json_out);

/* --- sequences and hyperspace points ------------------------------------ */

/* Exact prefix-metric distance between two eventually periodic words given
 * as PRE(PER) literals; the result JSON carries the value as "p/q". */
shs_status shs_dist_json(const char* lit_a, const char* lit_b, char** json_out);

/* Set file: one literal or tagged stream spec per line, '#' comments. */
shs_status shs_set_parse(const char* text, shs_set** out);
shs_status shs_set_read_file(const char* path, shs_set** out);
void shs_set_free(shs_set* s);
shs_status shs_set_format(const shs_set* s, char** text_out);

/* Exact Hausdorff distance when both sets are eventually periodic, else a
 * certified bracket at the given comparison depth. */
shs_status shs_hausdorff_json(const shs_set* a, const shs_set* b, long depth,
                              char** json_out);

/* --- experiments --------------------------------------------------------- */

/* Separation-time experiment for a cylinder of a system. system_spec is a
 * stream tag (ep:PRE(PER), sturmian:fib, sturmian:p/q[:rp/rq], wk:linear) or
 * sft:<matrix file>. delta = 2^-delta_exp. */
shs_status shs_sens_json(const char* system_spec, const char* cylinder, int delta_exp,
                         long horizon, char** json_out);

/* Constructive witnesses. kind is one of: periodize, leo, full-sens,
 * liyorke, sft-sens, dense-periodic, example2-hyper. config_json carries the
 * kind-specific fields documented in the project README. */
shs_status shs_witness_json(const char* kind, const char* config_json, char** json_out);

/* Shift-invariant one-block families S1/S2 with their exact Hausdorff
 * distance and the closed-form comparisons. */
shs_status shs_expansivity_json(int n, char** json_out);

/* Hyperspace transitivity probe between cylinder families (comma-separated
 * vertex words over the alphabet 0-9a-z...). */
shs_status shs_probe_hyper_json(const shs_matrix* m, const char* src_csv,
                                const char* dst_csv, long horizon, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* SHIFTSPACE_H */
