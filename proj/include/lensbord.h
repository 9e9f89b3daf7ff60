/* Public C API for the lensbord library.
 *
 * All functions return lb_status; outputs go through pointer parameters.
 * Strings returned via char** are heap-allocated JSON and must be released
 * with lb_string_free. Handles are opaque and freed with their matching
 * _free function. lb_last_error_detail() describes the most recent failure
 * on the calling thread.
 */
#ifndef LENSBORD_H
#define LENSBORD_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lb_status {
    LB_OK = 0,
    LB_ERR_INVALID = 1,       /* invalid argument or malformed value */
    LB_ERR_CAPACITY = 2,      /* request exceeds a built-in search bound */
    LB_ERR_MISSING_BOUND = 3, /* r=1 reconstruction without a p bound */
    LB_ERR_PARSE = 4,         /* malformed JSON input */
    LB_ERR_INTERNAL = 5
} lb_status;

typedef enum lb_parity { LB_PARITY_ODD = 0, LB_PARITY_EVEN = 1 } lb_parity;

typedef struct lb_changemaker lb_changemaker;
typedef struct lb_vseq lb_vseq;
typedef struct lb_sigma_table lb_sigma_table;

const char* lb_version(void);
const char* lb_status_message(lb_status status);
const char* lb_last_error_detail(void);
void lb_string_free(char* text);

/* --- changemaker vectors ------------------------------------------------ */

/* Subset-sum reachability test; entries in any order, all >= 1. */
lb_status lb_is_changemaker(const int64_t* entries, size_t count, int* out);

lb_status lb_changemaker_new(const int64_t* entries, size_t count, lb_changemaker** out);
lb_status lb_changemaker_from_json(const char* json_text, lb_changemaker** out);
void lb_changemaker_free(lb_changemaker* sigma);

int64_t lb_changemaker_dim(const lb_changemaker* sigma);
lb_status lb_changemaker_entry(const lb_changemaker* sigma, int64_t index, int64_t* out);
int64_t lb_changemaker_p(const lb_changemaker* sigma);  /* sum of squares */
int64_t lb_changemaker_l1(const lb_changemaker* sigma); /* sum of entries */
int64_t lb_changemaker_odd_count(const lb_changemaker* sigma);
lb_status lb_changemaker_even_equal_partition(const lb_changemaker* sigma, int* out);
lb_status lb_changemaker_to_json(const lb_changemaker* sigma, char** out_json);

/* Exact subset-sum set by enumeration; at most 25 entries. */
lb_status lb_reachable_sums_json(const int64_t* entries, size_t count, char** out_json);

/* --- coin game ---------------------------------------------------------- */

lb_status lb_t_sigma(const lb_changemaker* sigma, int64_t coins, int64_t* out);
lb_status lb_t_sigma_rational(const lb_changemaker* sigma, int64_t coins, int64_t* out_num,
                              int64_t* out_den);
lb_status lb_count_plans(int64_t coins, uint64_t* out);

lb_status lb_sigma_table_new(const lb_changemaker* sigma, lb_sigma_table** out);
void lb_sigma_table_free(lb_sigma_table* table);
lb_status lb_sigma_table_value(const lb_sigma_table* table, int64_t index, int64_t* out);
lb_status lb_sigma_table_to_json(const lb_sigma_table* table, char** out_json);

lb_status lb_verify_structure_json(const lb_changemaker* sigma, int x_max, char** out_json);

/* --- knot invariants ---------------------------------------------------- */

lb_status lb_vseq_new(const int64_t* values, size_t count, lb_vseq** out);
/* Accepts {"v": [...]}, a bare array, or {"torus": [p, q]}. */
lb_status lb_vseq_from_json(const char* json_text, lb_vseq** out);
lb_status lb_vseq_torus(int64_t p, int64_t q, lb_vseq** out);
void lb_vseq_free(lb_vseq* v);

int64_t lb_vseq_nu_plus(const lb_vseq* v);
lb_status lb_vseq_value(const lb_vseq* v, int64_t index, int64_t* out);
lb_status lb_vseq_to_json(const lb_vseq* v, char** out_json);

lb_status lb_torus_alexander_json(int64_t p, int64_t q, char** out_json);
lb_status lb_relevant_view_json(const lb_vseq* v, int r, lb_parity p_parity, char** out_json);

/* --- surgery pipeline --------------------------------------------------- */

lb_status lb_slope_window_json(int64_t nu_plus, int r, char** out_json);
lb_status lb_v0_slope_check_json(const lb_changemaker* sigma, int r, int64_t v0,
                                 char** out_json);
/* p_hint and p_max are optional; pass 0 for "not given". */
lb_status lb_reconstruct_json(const lb_vseq* v, int r, lb_parity p_parity, int64_t p_hint,
                              int64_t p_max, char** out_json);
lb_status lb_count_bound(int r, int* out);
lb_status lb_feasible_r_json(const lb_changemaker* sigma, int64_t nu_plus, char** out_json);
lb_status lb_family_sigma(int64_t s, lb_changemaker** out);
/* mode: 1 for the spacing-1 statistic, 2 for the band statistic. */
lb_status lb_family_recover_json(const lb_vseq* v, int mode, char** out_json);
lb_status lb_family_checks_json(int64_t s, char** out_json);

/* --- lens-space lattices ------------------------------------------------ */

lb_status lb_hj_json(int64_t p, int64_t q, char** out_json);
lb_status lb_complement_gram_json(const lb_changemaker* sigma, char** out_json);
lb_status lb_embed_linear_json(const lb_changemaker* sigma, int64_t p, int64_t q,
                               char** out_json);
lb_status lb_realize_json(const lb_changemaker* sigma, int threads, char** out_json);

/* --- E8 side ------------------------------------------------------------ */

/* s_json: array of 8 coordinates, integers or exact halves as "n/2".
 * sigma_json: non-negative integer array (zeros allowed). */
lb_status lb_e8_check_json(const char* s_json, const char* sigma_json, char** out_json);
lb_status lb_e8_classify(int64_t g, int r, int64_t p, int* out_poincare);

/* --- batch scan ---------------------------------------------------------- */

lb_status lb_scan_json(const lb_vseq* v, int r_max, int64_t p_max_r1, int threads,
                       char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* LENSBORD_H */
