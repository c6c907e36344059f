/* C interface to the frog puzzle toolkit.
 *
 * Handles are opaque and owned by the caller; release them with the matching
 * *_free function. Strings returned through char** out-parameters are owned
 * by the library and released with fp_free_string. On any status other than
 * FP_OK, FP_UNSAT and FP_INCONCLUSIVE, fp_last_error() describes the failure
 * for the calling thread.
 */
#ifndef FROGPUZZLE_H
#define FROGPUZZLE_H

#include <stddef.h>
#include <stdint.h>

#if defined(FROGPUZZLE_BUILDING)
#define FP_API __attribute__((visibility("default")))
#else
#define FP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fp_status {
  FP_OK = 0,
  FP_UNSAT = 1,
  FP_INCONCLUSIVE = 2,
  FP_ERR_USAGE = 64,
  FP_ERR_PARSE = 65,
  FP_ERR_CONTRACT = 70,
  FP_ERR_REFUSED = 71,
  FP_ERR_CONSTRUCTION = 72,
  FP_ERR_INTERNAL = 73
} fp_status;

/* A 2-D or 1-D puzzle instance. */
typedef struct fp_instance fp_instance;
/* A permutation-reconstruction instance. */
typedef struct fp_prd fp_prd;
/* A grid graph with source and target. */
typedef struct fp_graph fp_graph;

FP_API const char* fp_last_error(void);
FP_API void fp_free_string(char* s);

FP_API void fp_instance_free(fp_instance* inst);
FP_API void fp_prd_free(fp_prd* prd);
FP_API void fp_graph_free(fp_graph* g);

/* ---- instances ---------------------------------------------------------- */

/* Board text plus "dx dy" jump lines. */
FP_API fp_status fp_instance_parse(const char* board, const char* jumps, fp_instance** out);
/* Single-row board text plus one signed integer per jump line. */
FP_API fp_status fp_instance_parse_1d(const char* board, const char* jumps, fp_instance** out);
/* JSON interchange format. *solution receives "+-..." or NULL. */
FP_API fp_status fp_instance_from_json(const char* json, fp_instance** out, char** solution);

FP_API int fp_instance_is_1d(const fp_instance* inst);
FP_API size_t fp_instance_jump_count(const fp_instance* inst);
FP_API size_t fp_instance_empty_count(const fp_instance* inst);
FP_API void fp_instance_size(const fp_instance* inst, int* width, int* height);

/* Board and jump text in the same formats the parsers accept. */
FP_API fp_status fp_instance_format(const fp_instance* inst, char** board, char** jumps);
/* JSON interchange; signs may be NULL to omit the solution. 1-D instances are
 * exported with height 1. */
FP_API fp_status fp_instance_to_json(const fp_instance* inst, const char* signs, char** out);

/* One line per diagnostic, "error: ..." or "warning: ...". *errors counts the
 * error lines. */
FP_API fp_status fp_instance_validate(const fp_instance* inst, char** report, int* errors);

/* ---- solving ------------------------------------------------------------ */

/* max_nodes = 0 is unlimited. Returns FP_OK with *signs set, FP_UNSAT, or
 * FP_INCONCLUSIVE. */
FP_API fp_status fp_solve(const fp_instance* inst, uint64_t max_nodes, char** signs,
                          uint64_t* nodes);

/* FP_OK when the trace is complete, FP_UNSAT otherwise. *report is a one-line
 * summary followed by the visited cells. */
FP_API fp_status fp_verify(const fp_instance* inst, const char* signs, char** report);

/* Every complete sign vector, one per line. Refused above max_m jumps. */
FP_API fp_status fp_oracle(const fp_instance* inst, size_t max_m, char** solutions,
                           size_t* count);

/* ---- gadgets ------------------------------------------------------------ */

/* family: binary, binary-rev, fill, hole, selector, strip-cleanup.
 * *jumps gets one jump per line; with want_fixture, *board gets the companion
 * board (may be NULL otherwise). */
FP_API fp_status fp_gen_gadget(const char* family, int k, int want_fixture, char** jumps,
                               char** board);

/* ---- reductions --------------------------------------------------------- */

FP_API fp_status fp_graph_parse(const char* text, fp_graph** out);

/* *layout gets "key value" lines describing the layout. */
FP_API fp_status fp_reduce_ham(const fp_graph* g, fp_instance** out, char** layout);
/* Hamiltonian path by brute force, then the matching traversal. FP_UNSAT when
 * no path exists. */
FP_API fp_status fp_ham_witness(const fp_graph* g, char** path, char** signs);
/* Decodes the node path from a complete traversal of fp_reduce_ham(g). */
FP_API fp_status fp_ham_extract(const fp_graph* g, const char* signs, char** path);

FP_API fp_status fp_reduce_2d_to_1d(const fp_instance* inst, fp_instance** out, char** notes);
FP_API fp_status fp_normalize_leftmost(const fp_instance* inst, fp_instance** out);
FP_API fp_status fp_reduce_1d_to_empty(const fp_instance* inst, fp_instance** out, char** notes);
FP_API fp_status fp_empty_to_prd(const fp_instance* inst, fp_prd** out);
/* *provenance gets one line per stage. */
FP_API fp_status fp_reduce_full(const fp_graph* g, fp_prd** out, char** provenance);

/* ---- permutation reconstruction ----------------------------------------- */

FP_API fp_status fp_prd_parse(const char* text, fp_prd** out);
FP_API fp_status fp_prd_format(const fp_prd* prd, char** out);
FP_API fp_status fp_prd_solve(const fp_prd* prd, uint64_t max_nodes, char** perm,
                              uint64_t* nodes);
/* FP_OK when the permutation verifies, FP_UNSAT when it does not. */
FP_API fp_status fp_prd_verify(const fp_prd* prd, const char* perm);
FP_API fp_status fp_prd_to_cfp(const fp_prd* prd, fp_instance** out);

/* ---- generator ---------------------------------------------------------- */

FP_API fp_status fp_make_instance(int width, int height, int walk_length, uint64_t seed,
                                  fp_instance** out, char** witness);

#ifdef __cplusplus
}
#endif

#endif /* FROGPUZZLE_H */
