#include "core/ring.hpp"

#include <algorithm>
#include <string>

#include "core/error.hpp"

namespace clashfree {

namespace {

void check_modulus(uint32_t n) {
    if (n < 2) throw_param("modulus must be at least 2, got " + std::to_string(n));
    if (n > kMaxModulus) throw_param("modulus exceeds supported maximum " + std::to_string(kMaxModulus));
}

}  // namespace

uint32_t circ_dist(uint32_t i, uint32_t j, uint32_t n) {
    check_modulus(n);
    if (i >= n || j >= n) {
        throw_param("residues must lie in [0, " + std::to_string(n) + "), got " + std::to_string(i) +
                    " and " + std::to_string(j));
    }
    uint32_t d = i >= j ? i - j : j - i;
    return std::min(d, n - d);
}

ResidueSet::ResidueSet(uint32_t n, std::vector<uint32_t> members) : n_(n), members_(std::move(members)) {
    check_modulus(n_);
    if (members_.empty()) throw_param("residue set must be nonempty");
    std::sort(members_.begin(), members_.end());
    if (members_.back() >= n_) {
        throw_param("residue " + std::to_string(members_.back()) + " out of range for modulus " +
                    std::to_string(n_));
    }
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
        throw_param("residue set members must be distinct");
    }
}

uint32_t span_of_sorted(const std::vector<uint32_t>& sorted_members, uint32_t n) {
    // Largest gap between cyclically consecutive members; the set fits in an
    // interval of n - max_gap + 1 consecutive residues.
    size_t t = sorted_members.size();
    uint32_t max_gap = sorted_members.front() + n - sorted_members.back();
    for (size_t a = 1; a < t; ++a) {
        max_gap = std::max(max_gap, sorted_members[a] - sorted_members[a - 1]);
    }
    return n - max_gap;
}

uint32_t span(const ResidueSet& set) { return span_of_sorted(set.members(), set.n()); }

Permutation::Permutation(uint32_t n, std::vector<uint32_t> values) : n_(n), values_(std::move(values)) {
    check_modulus(n_);
    if (values_.size() != n_) {
        throw_param("permutation needs exactly " + std::to_string(n_) + " values, got " +
                    std::to_string(values_.size()));
    }
    std::vector<bool> seen(n_, false);
    for (uint32_t v : values_) {
        if (v >= n_) throw_param("permutation value " + std::to_string(v) + " out of range");
        if (seen[v]) throw_param("permutation repeats value " + std::to_string(v));
        seen[v] = true;
    }
}

Permutation Permutation::identity(uint32_t n) {
    check_modulus(n);
    std::vector<uint32_t> values(n);
    for (uint32_t i = 0; i < n; ++i) values[i] = i;
    return Permutation(n, std::move(values));
}

Permutation translate(const Permutation& pi, uint32_t a, uint32_t b) {
    uint32_t n = pi.n();
    if (a >= n || b >= n) throw_param("translation offsets must lie in [0, n)");
    std::vector<uint32_t> values(n);
    for (uint32_t i = 0; i < n; ++i) {
        uint32_t src = (i + n - a) % n;
        values[i] = (pi(src) + b) % n;
    }
    return Permutation(n, std::move(values));
}

Permutation invert(const Permutation& pi) {
    uint32_t n = pi.n();
    std::vector<uint32_t> values(n);
    for (uint32_t i = 0; i < n; ++i) values[pi(i)] = i;
    return Permutation(n, std::move(values));
}

}  // namespace clashfree
