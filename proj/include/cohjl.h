/* C interface to the cohomological-dual / Jacquet-Langlands library.
 *
 * All structured data crosses this boundary as JSON text (see README for
 * the schemas); results are returned through malloc'd strings that the
 * caller releases with cohjl_string_free. Every entry point reports
 * success through a cohjl_status code; on failure a human-readable message
 * is kept on the context and read back with cohjl_last_error.
 */
#ifndef COHJL_H
#define COHJL_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct cohjl_ctx cohjl_ctx;

typedef enum cohjl_status {
  COHJL_OK = 0,
  /* malformed input: unparsable JSON, bad flag values, invalid weights */
  COHJL_ERR_INVALID_INPUT = 1,
  /* a documented precondition failed (NotSelfDual, OddPart, ...) */
  COHJL_ERR_DOMAIN = 2,
  /* a requested check ran and did not pass */
  COHJL_ERR_CHECK_FAILED = 3,
  COHJL_ERR_INTERNAL = 4
} cohjl_status;

cohjl_ctx* cohjl_ctx_new(void);
void cohjl_ctx_free(cohjl_ctx* ctx);
const char* cohjl_last_error(const cohjl_ctx* ctx);
void cohjl_string_free(char* s);
const char* cohjl_version(void);

/* JSON array of the 2^k ordered partitions of k, lexicographic. */
cohjl_status cohjl_enumerate_partitions(cohjl_ctx* ctx, int k, char** out_json);

/* Catalog of Coh_mu for kind "H" (GL_k(H)) or "R" (GL_{2k}(R)); mu_json is
 * the integer array of the 2k highest-weight entries. Returns a JSON array
 * of catalog rows. */
cohjl_status cohjl_catalog(cohjl_ctx* ctx, const char* kind, int k, const char* mu_json,
                           char** out_json);

/* Textual tables of Coh_mu(GL_{2k}(R)) and Coh_mu(GL_k(H)). */
cohjl_status cohjl_tables(cohjl_ctx* ctx, int k, const char* mu_json, char** out_text);

/* Poincare polynomial of a catalog row; output carries both the
 * coefficient map and a pretty-printed form. */
cohjl_status cohjl_poincare(cohjl_ctx* ctx, const char* row_json, char** out_json);

/* Jacquet-Langlands transfer of a split row; returns the quaternionic row. */
cohjl_status cohjl_transfer(cohjl_ctx* ctx, const char* row_json, char** out_json);

/* Fiber of the transfer over a quaternionic row inside Coh_mu; returns a
 * JSON array of split rows. */
cohjl_status cohjl_fiber(cohjl_ctx* ctx, const char* row_json, const char* mu_json,
                         char** out_json);

/* Langlands parameter of a split row plus the algebraic / regular / purity
 * predicates. */
cohjl_status cohjl_parameter(cohjl_ctx* ctx, const char* row_json, char** out_json);

/* Predicates on a raw parameter given as a JSON array of
 * [p_num, p_den, q_num, q_den] quadruples. */
cohjl_status cohjl_param_predicates(cohjl_ctx* ctx, const char* pairs_json, char** out_json);

/* Operations on global descriptor files. op is one of "jl", "purity",
 * "rationality", "kunneth", "field-equality", "check-regular-algebraic".
 * "check-regular-algebraic" returns COHJL_ERR_CHECK_FAILED when it ran and
 * failed; the JSON output then lists the reasons. */
cohjl_status cohjl_descriptor_run(cohjl_ctx* ctx, const char* op, const char* descriptor_json,
                                  char** out_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* COHJL_H */
