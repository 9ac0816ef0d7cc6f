#pragma once

// Explicit construction of clash-free permutations. Residues are arranged
// in a d x ell matrix (d = gcd(s+1, n), ell = n/d) whose entry at (i, j) is
// i + j(s+1) mod n, and a closed walk through all n cells reads off a
// permutation whose inverse separates close elements.

#include <cstdint>
#include <utility>
#include <vector>

#include "core/ring.hpp"

namespace clashfree {

struct ConstructionParams {
    uint32_t n = 0;    // modulus
    uint32_t s = 0;    // separation target of the built permutation
    uint32_t d = 0;    // gcd(s + 1, n), number of matrix rows
    uint32_t ell = 0;  // n / d, number of matrix columns

    bool operator==(const ConstructionParams&) const = default;
};

/// Validates 1 <= s, s + 1 < n and fills in d and ell.
ConstructionParams derive_params(uint32_t n, uint32_t s);

enum class MoveKind : uint8_t {
    east = 0,        // (i, j) -> (i, j+1), value += s+1
    south_east = 1,  // (i, j) -> (i+1, j+1), value += s+2
    north_east = 2,  // (i, j) -> (i-1, j+1), value += s
};

struct Move {
    MoveKind kind;
    uint32_t delta;  // s+1, s+2 or s; applied mod n

    bool operator==(const Move&) const = default;
};

struct Cell {
    uint32_t row = 0;
    uint32_t col = 0;

    bool operator==(const Cell&) const = default;
};

/// Matrix entry i + j(s+1) mod n. Requires i < d, j < ell.
uint32_t matrix_entry(const ConstructionParams& params, uint32_t i, uint32_t j);

/// The move leaving cell (i, j): south-east when the cell lies on the
/// wrapped antidiagonal j = ell-1-i (mod ell) and a row below exists,
/// north-east one column later when a row above exists, east otherwise.
Move next_move(const ConstructionParams& params, uint32_t i, uint32_t j);

struct CycleWalk {
    ConstructionParams params;
    std::vector<Cell> cells;  // n cells starting at (0, 0)
    std::vector<Move> moves;  // moves[t] leads from cells[t] to cells[t+1 mod n]
};

/// Walks the full cycle from (0, 0), visiting every cell exactly once and
/// closing back at the start. A walk violating that is reported as an
/// internal error naming the offending step.
CycleWalk cycle_walk(const ConstructionParams& params);

/// Reads matrix entries along the cycle walk: the t-th value is the entry
/// at the walk's t-th cell. Consecutive values differ by s, s+1 or s+2.
Permutation build_cycle_permutation(uint32_t n, uint32_t s);

/// Interval [max(1, floor((n-1)/k) - 1), floor((n-1)/k)] bracketing the
/// largest s for which some permutation is pairwise (s, k)-clash-free.
/// Degenerate regimes: k >= n gives (1, 1) and k = 1 gives (n, n).
std::pair<uint32_t, uint32_t> sigma_bounds(uint32_t n, uint32_t k);

/// Interval [floor((rn-1)/k) - 1, floor((rn-1)/k)] for the threshold-(r+1)
/// generalization. Requires 1 < r < k < n.
std::pair<uint32_t, uint32_t> sigma_bounds_multi(uint32_t n, uint32_t k, uint32_t r);

/// Whether the cycle construction at target s is guaranteed
/// (s, k, r)-clash-free: k(s+1) + d - 3 <= rn - 1 with d = gcd(s+1, n).
/// Requires r < k < n and 1 <= s, s + 1 < n.
bool multi_construction_condition(uint32_t n, uint32_t k, uint32_t s, uint32_t r);

struct Construction {
    uint32_t s = 0;        // achieved separation
    bool trivial = false;  // set when the regime needs no real construction
    Permutation perm;      // (s, k)-clash-free (resp. (s, k, r)-clash-free)
};

/// Largest guaranteed s for the pairwise problem: s = floor((n-1)/k) - 1.
/// Returns the inverse of the cycle permutation, which is (s, k)-clash-free.
/// When that s would be < 2 the identity already suffices (with s = max(s, 1)).
/// Requires 2 <= k < n.
Construction construct_pairwise(uint32_t n, uint32_t k);

/// Multi analogue at s = floor((rn-1)/k) - 1 for 1 < r < k < n. The
/// construction condition above always holds in this range.
Construction construct_multi(uint32_t n, uint32_t k, uint32_t r);

}  // namespace clashfree
