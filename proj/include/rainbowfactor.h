#ifndef RAINBOWFACTOR_H
#define RAINBOWFACTOR_H

/* C interface to the rainbow factor library. All functions return an error
 * code; RF_OK means success. On failure rf_last_error() holds a thread-local
 * message describing what went wrong. Strings handed out through char**
 * parameters are heap allocated and must be released with rf_string_free.
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define RF_OK 0
#define RF_ERR_INVALID 1  /* malformed input or argument */
#define RF_ERR_IO 2       /* file could not be read or written */
#define RF_ERR_INTERNAL 3 /* invariant violation inside the library */

typedef struct rf_system rf_system;
typedef struct rf_pattern rf_pattern;

const char* rf_version(void);

/* Message for the most recent failing call on this thread ("" if none). */
const char* rf_last_error(void);

void rf_string_free(char* s);

/* ---- systems ---------------------------------------------------------- */

/* Parse a system from its text format / read it from a file. */
int rf_system_parse(const char* text, rf_system** out);
int rf_system_read(const char* path, rf_system** out);
int rf_system_serialize(const rf_system* sys, char** out_text);
int rf_system_info(const rf_system* sys, int* n, int* k, int* m, int* num_classes);
void rf_system_free(rf_system* sys);

/* Generate an instance; spec_json example:
 *   {"kind":"extremal","t":3,"n":9}
 *   {"kind":"completion","t":3,"n":9,"seed":7}
 *   {"kind":"space","k":3,"n":9}
 *   {"kind":"complete","n":6,"k":2,"m":4,"directed":false,"classes":0}
 *   {"kind":"random","n":12,"k":2,"m":12,"rule":"standard:1","delta":9,
 *    "delete_prob":0.5,"seed":1,"directed":false,"classes":0}
 */
int rf_generate(const char* spec_json, rf_system** out);

/* ---- patterns ---------------------------------------------------------- */

/* Parse "clique:t" | "edge:k" | "ttour:k" | "tour:k:SIGNS" | "pclique:k". */
int rf_pattern_parse(const char* text, rf_pattern** out);
int rf_pattern_info(const rf_pattern* pat, int* b, int* f, int* k, int* directed, int* partite);
void rf_pattern_free(rf_pattern* pat);

/* ---- degrees ----------------------------------------------------------- */

/* rule: "standard:d" | "out" | "in" | "semi" | "partite". */
int rf_min_star_degree(const rf_system* sys, const char* rule, long long* out);

/* ---- linear programs --------------------------------------------------- */

/* hypergraph_text uses the "hg n" format. mode: "matching" | "cover" |
 * "pfm" (b = edge size; fails on non-uniform input). The report carries the
 * exact rational value, per-edge or per-vertex weights, and for pfm either
 * the matching or the infeasibility certificate. *feasible is 1/0 for pfm
 * (always 1 for the other modes).
 */
int rf_lp_solve_text(const char* hypergraph_text, const char* mode, int b,
                     char** report, int* feasible);

/* ---- solving and verification ------------------------------------------ */

/* options_json: {"strategy":"absorption"|"exact",
 *                "config":{"seed":1,"gamma1":0.05,...}}   (both optional)
 * result_json: {"status":"factor"|"infeasible"|"fail"|"timeout",
 *               "copies":[{"embed":[...],"colors":[...]},...],
 *               "leftover":[...],"ms":...,"stats":{...},
 *               "warnings":[...],"message":"..."}
 */
int rf_solve(const rf_system* sys, const rf_pattern* pat, const char* options_json,
             char** result_json);

/* packing_json: {"copies":[{"embed":[...],"colors":[...]},...]}.
 * check_factor != 0 demands a full factor, otherwise a valid packing.
 * *valid is 1/0; when 0, *reason_out (optional) explains why.
 */
int rf_verify_packing(const rf_system* sys, const rf_pattern* pat, const char* packing_json,
                      int check_factor, int* valid, char** reason_out);

/* targets_json: {"target":[v...],"colors":[c...]}. Enumerates gadgets for
 * the pattern's family (single-edge patterns use the reduction graph, the
 * 2-uniform clique families the direct construction). result_json is an
 * array of {B, L, interior, exterior, new_colors}.
 */
int rf_enumerate_absorbers(const rf_system* sys, const rf_pattern* pat,
                           const char* targets_json, long long limit, char** result_json);

/* ---- sweeps ------------------------------------------------------------ */

/* spec_json: {"pattern":"clique:3","ns":[6,9],"fracs":[0.75],"seeds":2,
 *             "seed_base":0,"strategies":["exact"],"kind":"random",
 *             "delete_prob":0.5,"jobs":1,"stable_output":true,
 *             "config":{...}}
 * Either output pointer may be NULL if that format is not wanted.
 */
int rf_sweep_run(const char* spec_json, char** csv_out, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* RAINBOWFACTOR_H */
