/*
 * C interface to the triple-vector-bundle duality engine.
 *
 * The library models the order-96 duality group generated by the three
 * dualization operations X, Y, Z on a triple vector bundle: exact word
 * evaluation, canonical group elements, whole-group structure reports,
 * verification of every documented structural claim, and an exact-rational
 * concrete-model oracle.
 *
 * Conventions:
 *   - Every function returns a dg_status; results come back through out
 *     parameters.  On failure the out parameters are untouched.
 *   - Strings returned through char** are heap-allocated; release them with
 *     dg_string_free.  Handles are released with their matching _free call.
 *   - dg_last_error_message / dg_last_error_offset describe the most recent
 *     failure on the calling thread (offset is -1 unless a parse failed).
 *   - Words use the grammar: word := '1' | term+ ; term := atom ('^' uint)? ;
 *     atom := 'X' | 'Y' | 'Z' | '(' word ')'.
 */
#ifndef TVB_DUALITY_H
#define TVB_DUALITY_H

#ifdef __cplusplus
extern "C" {
#endif

#ifndef DG_API
#if defined(_WIN32)
#define DG_API
#else
#define DG_API __attribute__((visibility("default")))
#endif
#endif

typedef enum dg_status {
  DG_OK = 0,
  DG_ERR_PARSE = 1,             /* malformed word; offset reported */
  DG_ERR_INVALID_ARGUMENT = 2,  /* bad parameter, unknown name, null handle */
  DG_ERR_PRECONDITION = 3,      /* structural precondition violated */
  DG_ERR_OVERFLOW = 4,          /* exact arithmetic exceeded 64-bit range */
  DG_ERR_INTERNAL = 5           /* invariant breakage; indicates a bug */
} dg_status;

typedef struct dg_element dg_element;
typedef struct dg_group dg_group;

/* Most recent error on this thread. The message remains valid until the
 * next failing call on the same thread. */
DG_API const char *dg_last_error_message(void);
DG_API long dg_last_error_offset(void);

/* ----- elements of the order-96 triple-bundle duality group ----- */

/* Parses and evaluates a word; the element's witness is canonicalized to
 * the shortest (then lexicographically first) representing word. */
DG_API dg_status dg_element_parse(const char *word, dg_element **out);
DG_API dg_status dg_element_compose(const dg_element *first,
                                    const dg_element *second,
                                    dg_element **out);
DG_API dg_status dg_element_invert(const dg_element *e, dg_element **out);
DG_API dg_status dg_element_equal(const dg_element *a, const dg_element *b,
                                  int *out_equal);
DG_API dg_status dg_element_order(const dg_element *e, int *out_order);
/* Signed 6x6 slot-permutation matrix, row-major, entries in {-1, 0, +1}. */
DG_API dg_status dg_element_matrix6(const dg_element *e, int out[36]);
/* Index permutation images of 0, 1, 2, 3. */
DG_API dg_status dg_element_perm(const dg_element *e, int out[4]);
/* Canonical action row, e.g. "-μ, -ν, α, -λ, -γ, -β, βμ + γν - ρ". */
DG_API dg_status dg_element_row_text(const dg_element *e, char **out);
/* Cycle notation of the index permutation, e.g. "(01)"; identity is "()". */
DG_API dg_status dg_element_perm_cycles(const dg_element *e, char **out);
/* Canonical witness word (compact grammar form; identity is "1"). */
DG_API dg_status dg_element_witness(const dg_element *e, char **out);
DG_API dg_status dg_element_to_json(const dg_element *e, char **out);
DG_API dg_status dg_element_to_text(const dg_element *e, char **out);
DG_API void dg_element_free(dg_element *e);

/* ----- group enumeration and structure reports ----- */

/* name is "dg2" (double-bundle group, order 6) or "dg3" (order 96). */
DG_API dg_status dg_group_enumerate(const char *name, dg_group **out);
DG_API dg_status dg_group_order(const dg_group *g, int *out_order);
/* Structure report: conjugacy classes, normal subgroups, kernel,
 * semidirect decomposition, splitness. as_json selects JSON or text. */
DG_API dg_status dg_group_report(const dg_group *g, int as_json, char **out);
DG_API void dg_group_free(dg_group *g);

/* ----- verification and the concrete oracle ----- */

/* Runs one named check (order, kernel, tables, classes, normal, semidirect,
 * split, correction, k4module, dg2, oracle, coherence, flip, faithful,
 * properties) or, when check is NULL or empty, the full suite.  table
 * restricts the reference-table check to one table (2..6; 0 = all). */
DG_API dg_status dg_verify_run(const char *check, int table, int as_json,
                               char **out_report, int *out_all_pass);

/* Newline-separated list of the known check names. */
DG_API dg_status dg_verify_names(char **out);

/* Builds a seeded random concrete statomorphism with the seven building
 * dimensions in dims, re-derives its dual along each axis in axes (subset
 * of "XYZ"; NULL or empty means all three) via the pairing linear solve,
 * compares against the symbolic dualization, and checks pairing invariance
 * on `samples` compatible pairs per axis. */
DG_API dg_status dg_oracle_run(const int dims[7], unsigned long long seed,
                               const char *axes, int samples, int as_json,
                               char **out_report, int *out_ok);

DG_API void dg_string_free(char *s);

#ifdef __cplusplus
}
#endif

#endif /* TVB_DUALITY_H */
