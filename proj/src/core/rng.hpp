#pragma once

#include <cstdint>

#include "core/ring.hpp"

namespace clashfree {

/// Seeded uniform random permutation, identical across platforms: draws
/// come from std::mt19937_64 (a fixed sequence for a given seed) and the
/// Fisher-Yates index is reduced by plain modulo, avoiding the
/// implementation-defined std::uniform_int_distribution.
Permutation random_permutation(uint32_t n, uint64_t seed);

}  // namespace clashfree
