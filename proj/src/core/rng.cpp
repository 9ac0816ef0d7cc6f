#include "core/rng.hpp"

#include <random>
#include <utility>
#include <vector>

namespace clashfree {

Permutation random_permutation(uint32_t n, uint64_t seed) {
    Permutation base = Permutation::identity(n);  // validates n
    std::vector<uint32_t> values = base.values();
    std::mt19937_64 gen(seed);
    for (uint32_t i = n - 1; i > 0; --i) {
        uint32_t j = (uint32_t)(gen() % ((uint64_t)i + 1));
        std::swap(values[i], values[j]);
    }
    return Permutation(n, std::move(values));
}

}  // namespace clashfree
