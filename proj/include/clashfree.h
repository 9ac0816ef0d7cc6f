/*
 * clashfree: permutations of Z_n that keep close elements apart.
 *
 * A pair i != j of residues (s, k)-clashes under a permutation pi when
 * both circular distances dist(i, j) < s and dist(pi(i), pi(j)) < k; an
 * (r+1)-subset (s, k, r)-clashes when it fits in s consecutive residues
 * and its image fits in k consecutive residues. The library builds
 * permutations without clashes, verifies arbitrary ones, computes the
 * exact threshold sigma for small n, and renders the geometry as SVG.
 *
 * All functions returning cf_status report failure through the code and
 * leave result parameters untouched; cf_last_error() describes the most
 * recent failure on the calling thread. Objects returned through out
 * parameters are owned by the caller and released with the matching
 * cf_*_free function.
 */

#ifndef CLASHFREE_H
#define CLASHFREE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CF_API __declspec(dllexport)
#else
#define CF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cf_status {
    CF_OK = 0,
    CF_ERR_PARAM = 1,    /* arguments outside a function's domain */
    CF_ERR_RESOURCE = 2, /* instance exceeds a configured cap */
    CF_ERR_INTERNAL = 3  /* broken invariant inside the library */
} cf_status;

/* Message for the most recent failure on this thread; empty string if none. */
CF_API const char* cf_last_error(void);

/* ------------------------------------------------------------------ */
/* Permutations of Z_n and ring arithmetic                             */

typedef struct cf_perm cf_perm;

/* Validates that values holds each of 0 .. n-1 exactly once. n >= 2. */
CF_API cf_status cf_perm_create(uint32_t n, const uint32_t* values, cf_perm** out);
CF_API cf_status cf_perm_identity(uint32_t n, cf_perm** out);
/* Seeded Fisher-Yates shuffle; identical bytes on every platform. */
CF_API cf_status cf_perm_random(uint32_t n, uint64_t seed, cf_perm** out);
CF_API void cf_perm_free(cf_perm* p);

CF_API uint32_t cf_perm_n(const cf_perm* p);
/* Image of i; returns UINT32_MAX when i >= n. */
CF_API uint32_t cf_perm_at(const cf_perm* p, uint32_t i);
/* Copies all n values into buf (caller provides space for n). */
CF_API void cf_perm_values(const cf_perm* p, uint32_t* buf);

/* i -> pi(i - a) + b with offsets a, b < n. */
CF_API cf_status cf_perm_translate(const cf_perm* p, uint32_t a, uint32_t b, cf_perm** out);
CF_API cf_status cf_perm_invert(const cf_perm* p, cf_perm** out);

/* min((i - j) mod n, (j - i) mod n); requires i, j < n. */
CF_API cf_status cf_circ_dist(uint32_t i, uint32_t j, uint32_t n, uint32_t* out);
/* Smallest run of consecutive residues holding all members, minus one:
 * 0 for a single member, circular distance for two. Members must be
 * distinct residues mod n; count >= 1. */
CF_API cf_status cf_span(uint32_t n, const uint32_t* members, size_t count, uint32_t* out);

/* ------------------------------------------------------------------ */
/* Construction                                                        */

/* d = gcd(s+1, n) and ell = n/d for the matrix walk; needs s+1 < n. */
CF_API cf_status cf_derive_params(uint32_t n, uint32_t s, uint32_t* d, uint32_t* ell);
/* Entry row + col*(s+1) mod n of the d x ell matrix; row < d, col < ell. */
CF_API cf_status cf_matrix_entry(uint32_t n, uint32_t s, uint32_t row, uint32_t col, uint32_t* out);

typedef enum cf_move_kind {
    CF_MOVE_EAST = 0,       /* value step s+1 */
    CF_MOVE_SOUTH_EAST = 1, /* value step s+2 */
    CF_MOVE_NORTH_EAST = 2  /* value step s   */
} cf_move_kind;

/* The n moves of the closed matrix walk, as cf_move_kind bytes. */
CF_API cf_status cf_walk_moves(uint32_t n, uint32_t s, uint8_t* moves /* n bytes */);
/* The permutation read off along the walk. */
CF_API cf_status cf_build_cycle_permutation(uint32_t n, uint32_t s, cf_perm** out);

/* Interval bracketing sigma(n, k), the largest s with an (s, k)-clash-free
 * permutation: floor((n-1)/k) - 1 <= sigma <= floor((n-1)/k) for
 * 2 <= k < n, with the degenerate answers for k = 1 and k >= n. */
CF_API cf_status cf_sigma_bounds(uint32_t n, uint32_t k, uint32_t* lower, uint32_t* upper);
/* Same for sigma(n, k, r) with 1 < r < k < n: floor((rn-1)/k) - 1 .. floor((rn-1)/k). */
CF_API cf_status cf_sigma_bounds_multi(uint32_t n, uint32_t k, uint32_t r, uint32_t* lower, uint32_t* upper);
/* Whether the built permutation is guaranteed (s, k, r)-clash-free:
 * k(s+1) + gcd(s+1, n) - 3 <= rn - 1. Requires 1 <= r < k < n. */
CF_API cf_status cf_multi_construction_condition(uint32_t n, uint32_t k, uint32_t s, uint32_t r, int* holds);

/* Inverse of the cycle permutation at the guaranteed separation
 * s = floor((n-1)/k) - 1; *trivial is set when s <= 1 and the identity is
 * returned instead. Requires 2 <= k < n. */
CF_API cf_status cf_construct_pairwise(uint32_t n, uint32_t k, uint32_t* s_out, int* trivial, cf_perm** out);
/* Same at s = floor((rn-1)/k) - 1 for 1 < r < k < n. */
CF_API cf_status cf_construct_multi(uint32_t n, uint32_t k, uint32_t r, uint32_t* s_out, int* trivial,
                                    cf_perm** out);

/* ------------------------------------------------------------------ */
/* Verification                                                        */

typedef struct cf_witness_list cf_witness_list;

CF_API void cf_witness_list_free(cf_witness_list* list);
CF_API size_t cf_witness_count(const cf_witness_list* list);
/* Number of indices in witness idx. */
CF_API size_t cf_witness_size(const cf_witness_list* list, size_t idx);
/* Copies the witness indices (sorted ascending) into buf. */
CF_API cf_status cf_witness_subset(const cf_witness_list* list, size_t idx, uint32_t* buf);
CF_API cf_status cf_witness_spans(const cf_witness_list* list, size_t idx, uint32_t* domain_span,
                                  uint32_t* image_span);

/* Pairwise check; *clash_free is 1 or 0. Requires s, k >= 1. */
CF_API cf_status cf_is_clash_free(const cf_perm* p, uint32_t s, uint32_t k, int* clash_free);
/* Every clashing pair {i, j}, i < j, lexicographically ordered. */
CF_API cf_status cf_find_pair_clashes(const cf_perm* p, uint32_t s, uint32_t k, cf_witness_list** out);

/* Crowding check for (r+1)-subsets. Requires 1 <= s, k <= n and r >= 1. */
CF_API cf_status cf_is_clash_free_multi(const cf_perm* p, uint32_t s, uint32_t k, uint32_t r, int* clash_free);
/* Clashing (r+1)-subsets: per domain window of s consecutive indices the
 * lexicographically least offender, deduplicated and sorted. */
CF_API cf_status cf_find_multi_clashes(const cf_perm* p, uint32_t s, uint32_t k, uint32_t r,
                                       cf_witness_list** out);

/* Literal enumeration of all (r+1)-subsets, for cross-checking. Set
 * max_subsets to 0 for the default cap (about 4.2 million subsets);
 * larger instances fail with CF_ERR_RESOURCE. */
CF_API cf_status cf_oracle_multi(const cf_perm* p, uint32_t s, uint32_t k, uint32_t r, uint64_t max_subsets,
                                 int* clash_free);
CF_API cf_status cf_oracle_enumerate(const cf_perm* p, uint32_t s, uint32_t k, uint32_t r,
                                     uint64_t max_subsets, cf_witness_list** out);

/* ------------------------------------------------------------------ */
/* Search (exact sigma at small n)                                     */

/* Searches fix pi(0) = 0 and try values in ascending order, so with
 * threads <= 1 the witness is the lexicographically least one. cap == 0
 * picks the default (12 when r == 1, 9 otherwise); n above the cap fails
 * with CF_ERR_RESOURCE. On success *found says whether a witness exists;
 * *witness (optional) receives it only when found. nodes (optional)
 * receives the number of tried value placements. */
CF_API cf_status cf_exists_clash_free(uint32_t n, uint32_t s, uint32_t k, uint32_t r, uint32_t cap,
                                      uint32_t threads, int* found, cf_perm** witness, uint64_t* nodes);

/* Exact sigma(n, k): probes one past the interval upper bound, then
 * descends to the largest s admitting a witness. probe_s/probe_found
 * (optional) report that probe; probe_s is 0 when no probe ran. */
CF_API cf_status cf_sigma_exact(uint32_t n, uint32_t k, uint32_t cap, uint32_t threads, uint32_t* value,
                                cf_perm** witness, uint64_t* nodes, uint32_t* probe_s, int* probe_found);
/* Exact sigma(n, k, r); r = 1 matches cf_sigma_exact, r >= min(k, n)
 * yields n, and k >= n descends without a probe. */
CF_API cf_status cf_sigma_exact_multi(uint32_t n, uint32_t k, uint32_t r, uint32_t cap, uint32_t threads,
                                      uint32_t* value, cf_perm** witness, uint64_t* nodes, uint32_t* probe_s,
                                      int* probe_found);

/* ------------------------------------------------------------------ */
/* Geometry and rendering                                              */

typedef struct cf_coverage cf_coverage;

/* How many of the s x k rectangles centered at (i, pi(i)) cover each
 * half-integer torus point. max_count <= r is equivalent to the
 * permutation being (s, k, r)-clash-free. */
CF_API cf_status cf_coverage_counts(const cf_perm* p, uint32_t s, uint32_t k, cf_coverage** out);
CF_API void cf_coverage_free(cf_coverage* g);
/* Grid points per axis, i.e. 2n. */
CF_API uint32_t cf_coverage_dim(const cf_coverage* g);
CF_API cf_status cf_coverage_at(const cf_coverage* g, uint32_t u, uint32_t v, uint32_t* count);
CF_API uint32_t cf_coverage_max(const cf_coverage* g);
CF_API uint64_t cf_coverage_total(const cf_coverage* g);

typedef struct cf_render_options {
    uint32_t cell_px;     /* pixels per torus unit */
    int grid;             /* nonzero: dotted unit grid */
    int heatmap;          /* nonzero: shade points covered more than highlight_r times */
    uint32_t highlight_r; /* heatmap threshold */
} cf_render_options;

/* Fills in the defaults: cell_px 20, grid on, heatmap off, highlight_r 1. */
CF_API void cf_render_options_init(cf_render_options* options);

/* Byte-deterministic SVG drawing; free the string with cf_string_free.
 * options may be NULL for the defaults. */
CF_API cf_status cf_render_svg(const cf_perm* p, uint32_t s, uint32_t k, const cf_render_options* options,
                               char** svg);
CF_API void cf_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* CLASHFREE_H */
