#pragma once

// Exhaustive search for clash-free permutations at small n, and exact
// computation of sigma(n, k) and sigma(n, k, r): the largest s for which
// an (s, k)-clash-free (resp. (s, k, r)-clash-free) permutation exists.
// Searches fix pi(0) = 0; clash-freeness is invariant under translation,
// so this loses no generality and the lexicographically least witness
// overall starts with 0.

#include <cstdint>
#include <optional>

#include "core/ring.hpp"

namespace clashfree {

inline constexpr uint32_t kDefaultPairSearchCap = 12;
inline constexpr uint32_t kDefaultMultiSearchCap = 9;

struct SearchLimits {
    uint32_t cap = 0;      // largest allowed n; 0 picks the mode default
    uint32_t threads = 1;  // worker threads fanning out over pi(1)
};

/// Lexicographically least (s, k, r)-clash-free permutation of Z_n, or
/// nullopt when none exists. With threads > 1 the existence answer and any
/// sigma value derived from it stay deterministic but the witness may be a
/// different valid one. nodes, when given, accumulates value placements.
std::optional<Permutation> exists_clash_free(uint32_t n, uint32_t s, uint32_t k, uint32_t r,
                                             const SearchLimits& limits = {}, uint64_t* nodes = nullptr);

struct SigmaResult {
    uint32_t n = 0;
    uint32_t k = 0;
    uint32_t r = 1;
    uint32_t value = 0;        // the exact sigma
    Permutation witness;       // clash-free at s = value
    uint64_t nodes = 0;        // total value placements across all probes
    uint32_t probe_s = 0;      // s probed above the known interval; 0 if no probe ran
    bool probe_found = false;  // whether that probe found a permutation
};

/// Exact sigma(n, k) by probing one past the interval upper bound, then
/// descending until a witness exists. Requires k >= 1 and n <= cap.
SigmaResult sigma_exact(uint32_t n, uint32_t k, const SearchLimits& limits = {});

/// Exact sigma(n, k, r). For r = 1 this is sigma_exact; for r >= min(k, n)
/// the value is n (every permutation qualifies); otherwise probe and
/// descend as above. With k >= n no two-sided interval is known and the
/// search simply descends from n.
SigmaResult sigma_exact_multi(uint32_t n, uint32_t k, uint32_t r, const SearchLimits& limits = {});

}  // namespace clashfree
