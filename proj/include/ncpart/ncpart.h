/* C interface to the ncpart library.
 *
 * Every entry point returns an ncpart_status. Results are NUL-terminated JSON
 * documents allocated by the library; release them with ncpart_string_free.
 * After a failure, ncpart_last_error(ctx) describes it until the next call on
 * the same context. A context may be used by one thread at a time; distinct
 * contexts are independent.
 *
 * Families are given as "A", "B" or "D"; family A with parameter n is the
 * symmetric group S_n, B and D with parameter n have rank n. Type tuples use
 * the grammar "A1,B2", "A1*A1,D3", "e" for the empty type; flavors are
 * "group" and "comb".
 */
#ifndef NCPART_H
#define NCPART_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define NCPART_API __declspec(dllexport)
#else
#define NCPART_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ncpart_status {
  NCPART_OK = 0,
  NCPART_INVALID_ARGUMENT = 1,
  NCPART_PARSE_ERROR,
  NCPART_NOT_IN_GROUP,
  NCPART_NOT_BELOW_COXETER,
  NCPART_UNPAIRED_B_CYCLES,
  NCPART_INVALID_TYPE,
  NCPART_RANK_MISMATCH,
  NCPART_FLAVOR_UNAVAILABLE,
  NCPART_INCONSISTENT_RANKS,
  NCPART_UNKNOWN_GROUP,
  NCPART_DATA_INTEGRITY,
  NCPART_TOO_LARGE,
  NCPART_BAD_BLOCK_SIZE,
  NCPART_NOT_A_UNIT,
  NCPART_BAD_COMPOSITION,
  NCPART_PRECONDITION_VIOLATED,
  NCPART_SINGULAR_POINT,
  NCPART_DIVISION_BY_ZERO,
  NCPART_INTERNAL
} ncpart_status;

typedef struct ncpart_context ncpart_context;
typedef struct ncpart_poset ncpart_poset;

NCPART_API const char* ncpart_version(void);
NCPART_API const char* ncpart_status_name(ncpart_status s);

NCPART_API ncpart_status ncpart_context_new(ncpart_context** out);
NCPART_API void ncpart_context_free(ncpart_context* ctx);
/* Groups with more elements than the limit are refused by the enumerating
 * routines (NCPART_TOO_LARGE). */
NCPART_API ncpart_status ncpart_context_set_oracle_limit(ncpart_context* ctx, uint64_t limit);
NCPART_API ncpart_status ncpart_context_set_seed(ncpart_context* ctx, uint64_t seed);
NCPART_API const char* ncpart_last_error(const ncpart_context* ctx);

NCPART_API void ncpart_string_free(char* s);

/* Decomposition numbers: closed form and enumeration. */
NCPART_API ncpart_status ncpart_decomp(ncpart_context* ctx, const char* family, int n, const char* types,
                                       const char* flavor, char** json_out);
NCPART_API ncpart_status ncpart_decomp_oracle(ncpart_context* ctx, const char* family, int n, const char* types,
                                              const char* flavor, char** json_out);

/* Rank-selected chain count for the composition ranks[0..count-1] of the rank.
 * The result carries the polynomial in m and, for m >= 1, its value. */
NCPART_API ncpart_status ncpart_chains(ncpart_context* ctx, const char* family, int n, int m, const int* ranks,
                                       size_t count, char** json_out);

/* Multichains with b[0..nb-1] blocks per size. With ns > 0 the ranks s are
 * prescribed; with ns == 0 they are free and l is the chain length. */
NCPART_API ncpart_status ncpart_blocks(ncpart_context* ctx, const char* family, int n, int m, const int* s,
                                       size_t ns, const int* b, size_t nb, int l, char** json_out);

NCPART_API ncpart_status ncpart_total(ncpart_context* ctx, const char* family, int n, int m, int l,
                                      char** json_out);

/* The poset NC^m of a classical family, built by enumeration. */
NCPART_API ncpart_status ncpart_poset_new(ncpart_context* ctx, const char* family, int n, int m,
                                          ncpart_poset** out);
NCPART_API void ncpart_poset_free(ncpart_poset* p);
NCPART_API ncpart_status ncpart_poset_size(ncpart_context* ctx, const ncpart_poset* p, size_t* out);
/* M-triangle and dual M-triangle as polynomials in x and y. */
NCPART_API ncpart_status ncpart_poset_m_triangle(ncpart_context* ctx, const ncpart_poset* p, char** json_out);
/* Multichains counted in the poset, for the same rank composition as ncpart_chains. */
NCPART_API ncpart_status ncpart_poset_count_chains(ncpart_context* ctx, const ncpart_poset* p, const int* ranks,
                                                   size_t count, char** json_out);

/* All multichains p_1 <= ... <= p_{l-1} in the poset. */
NCPART_API ncpart_status ncpart_poset_total(ncpart_context* ctx, const ncpart_poset* p, int l, char** json_out);

/* Three-way F = M comparison in type D. */
NCPART_API ncpart_status ncpart_fm_check(ncpart_context* ctx, int n, int m, char** json_out);

/* Expected number of rank-0 elements below the bottom of a multichain.
 * printed_form selects the uncorrected type-D numerator (kept for comparison). */
NCPART_API ncpart_status ncpart_expected_intervals(ncpart_context* ctx, const char* family, int n, int m, int i,
                                                   int l, int printed_form, char** json_out);

/* Exceptional groups: "I2", "I2(5)", "H3", "H4", "F4", "E6", "E7", "E8". */
NCPART_API ncpart_status ncpart_exc_lookup(ncpart_context* ctx, const char* group, const char* types,
                                           char** json_out);
/* Rank-selected chains as a polynomial in m, optionally evaluated at ms[0..nms-1]. */
NCPART_API ncpart_status ncpart_ranksel_exc(ncpart_context* ctx, const char* group, const int* ranks, size_t count,
                                            const long* ms, size_t nms, char** json_out);

/* Image of (w_0; w_1, ..., w_m) under the bijection to m-divisible partitions.
 * tuple is a ';'-separated list of m + 1 elements in cycle notation. */
NCPART_API ncpart_status ncpart_nabla(ncpart_context* ctx, const char* family, int n, const char* tuple,
                                      char** json_out);

/* Verification suites. scale is "small" or "full". */
NCPART_API ncpart_status ncpart_suite_names(ncpart_context* ctx, char** json_out);
NCPART_API ncpart_status ncpart_verify(ncpart_context* ctx, const char* suite, const char* scale, char** json_out);

#ifdef __cplusplus
}
#endif

#endif
