#pragma once

// Arithmetic on the ring of integers mod n: circular distance, spans of
// residue sets, and permutations with the operations the rest of the
// library builds on (translation and inversion).

#include <cstdint>
#include <vector>

namespace clashfree {

// n may not exceed this; keeps 2n grid coordinates and n*n products in range.
inline constexpr uint32_t kMaxModulus = 1u << 30;

/// Circular distance min((i-j) mod n, (j-i) mod n). Requires i, j < n, n >= 2.
uint32_t circ_dist(uint32_t i, uint32_t j, uint32_t n);

/// A nonempty set of distinct residues mod n, stored sorted ascending.
class ResidueSet {
public:
    ResidueSet(uint32_t n, std::vector<uint32_t> members);

    uint32_t n() const { return n_; }
    uint32_t size() const { return static_cast<uint32_t>(members_.size()); }
    const std::vector<uint32_t>& members() const { return members_; }

    bool operator==(const ResidueSet&) const = default;

private:
    uint32_t n_;
    std::vector<uint32_t> members_;  // strictly increasing
};

/// Span of a sorted residue sequence: n minus the largest cyclic gap
/// between consecutive members. Equals the size of the smallest interval
/// of consecutive residues containing the set, minus one. Singleton: 0.
uint32_t span_of_sorted(const std::vector<uint32_t>& sorted_members, uint32_t n);

/// span(X) for a residue set; 0 for singletons, circ_dist for pairs.
uint32_t span(const ResidueSet& set);

/// A permutation of Z_n. Construction validates bijectivity.
class Permutation {
public:
    Permutation(uint32_t n, std::vector<uint32_t> values);

    static Permutation identity(uint32_t n);

    uint32_t n() const { return n_; }
    uint32_t operator()(uint32_t i) const { return values_[i]; }
    const std::vector<uint32_t>& values() const { return values_; }

    bool operator==(const Permutation&) const = default;

private:
    uint32_t n_;
    std::vector<uint32_t> values_;  // values_[i] = image of i
};

/// The permutation i -> pi(i - a) + b. Requires a, b < n.
Permutation translate(const Permutation& pi, uint32_t a, uint32_t b);

/// Inverse permutation: invert(pi)(pi(i)) = i.
Permutation invert(const Permutation& pi);

}  // namespace clashfree
