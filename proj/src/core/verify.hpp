#pragma once

// Clash detection. A pair i != j clashes for (s, k) when both circular
// distances circ_dist(i, j) < s and circ_dist(pi(i), pi(j)) < k hold; an
// (r+1)-subset clashes for (s, k, r) when its span is < s and its image
// span is < k. The sweep-based detectors run in O(n s log s); the oracle
// enumerates subsets literally and is meant for cross-checking.

#include <cstdint>
#include <vector>

#include "core/ring.hpp"

namespace clashfree {

struct ClashWitness {
    ResidueSet subset;     // offending indices, sorted
    uint32_t domain_span;  // span of subset, < s
    uint32_t image_span;   // span of the image set, < k

    bool operator==(const ClashWitness&) const = default;
};

/// Every clashing unordered pair, as witnesses {i, j} with i < j in
/// lexicographic order. Requires s, k >= 1; output may be quadratic.
std::vector<ClashWitness> find_pair_clashes(const Permutation& pi, uint32_t s, uint32_t k);

/// Pairwise decision with short-circuiting; agrees with the list above.
bool is_clash_free(const Permutation& pi, uint32_t s, uint32_t k);

/// Clashing (r+1)-subsets found by sweeping the n domain windows of s
/// consecutive residues. Per offending window the lexicographically least
/// offending subset is reported; duplicates across windows are removed and
/// the result is sorted. Requires 1 <= s <= n and 1 <= k <= n.
std::vector<ClashWitness> find_multi_clashes(const Permutation& pi, uint32_t s, uint32_t k, uint32_t r);

/// Multi decision with short-circuiting; agrees with the list above.
bool is_clash_free_multi(const Permutation& pi, uint32_t s, uint32_t k, uint32_t r);

inline constexpr uint64_t kDefaultOracleSubsetCap = 1ull << 22;

/// Literal check of every (r+1)-subset of Z_n. Exceeding max_subsets is a
/// resource error. True means no subset clashes.
bool oracle_multi(const Permutation& pi, uint32_t s, uint32_t k, uint32_t r,
                  uint64_t max_subsets = kDefaultOracleSubsetCap);

/// Every clashing (r+1)-subset, in lexicographic order, by enumeration.
std::vector<ClashWitness> oracle_enumerate(const Permutation& pi, uint32_t s, uint32_t k, uint32_t r,
                                           uint64_t max_subsets = kDefaultOracleSubsetCap);

namespace detail {

/// Largest number of members of a sorted set of distinct residues mod n
/// falling in any window of k consecutive residues.
uint32_t max_images_in_window(const std::vector<uint32_t>& sorted_images, uint32_t k, uint32_t n);

}  // namespace detail

}  // namespace clashfree
