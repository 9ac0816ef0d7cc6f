#include "core/construct.hpp"

#include <numeric>
#include <string>

#include "core/error.hpp"

namespace clashfree {

ConstructionParams derive_params(uint32_t n, uint32_t s) {
    if (n < 2 || n > kMaxModulus) throw_param("modulus out of range: " + std::to_string(n));
    if (s < 1) throw_param("separation target must be at least 1");
    if (s + 1 >= n) {
        throw_param("need s + 1 < n, got s = " + std::to_string(s) + ", n = " + std::to_string(n));
    }
    ConstructionParams p;
    p.n = n;
    p.s = s;
    p.d = std::gcd(s + 1, n);
    p.ell = n / p.d;
    return p;
}

uint32_t matrix_entry(const ConstructionParams& params, uint32_t i, uint32_t j) {
    if (i >= params.d) throw_param("row " + std::to_string(i) + " out of range, d = " + std::to_string(params.d));
    if (j >= params.ell) {
        throw_param("column " + std::to_string(j) + " out of range, ell = " + std::to_string(params.ell));
    }
    uint64_t v = (uint64_t)i + (uint64_t)j * (params.s + 1);
    return (uint32_t)(v % params.n);
}

Move next_move(const ConstructionParams& params, uint32_t i, uint32_t j) {
    if (i >= params.d || j >= params.ell) {
        throw_param("cell (" + std::to_string(i) + ", " + std::to_string(j) + ") out of range");
    }
    uint32_t ell = params.ell;
    // Column of the wrapped antidiagonal through row i, and the column after it.
    uint32_t se_col = (2 * ell - 1 - i % ell) % ell;
    uint32_t ne_col = (se_col + 1) % ell;
    if (j == se_col && i < params.d - 1) return Move{MoveKind::south_east, params.s + 2};
    if (j == ne_col && i > 0) return Move{MoveKind::north_east, params.s};
    return Move{MoveKind::east, params.s + 1};
}

CycleWalk cycle_walk(const ConstructionParams& params) {
    uint32_t n = params.n, d = params.d, ell = params.ell;
    CycleWalk walk;
    walk.params = params;
    walk.cells.reserve(n);
    walk.moves.reserve(n);

    std::vector<bool> visited((size_t)d * ell, false);
    uint32_t i = 0, j = 0;
    for (uint32_t t = 0; t < n; ++t) {
        size_t idx = (size_t)i * ell + j;
        if (visited[idx]) {
            throw_internal("cycle walk revisits cell (" + std::to_string(i) + ", " + std::to_string(j) +
                           ") at step " + std::to_string(t));
        }
        visited[idx] = true;
        walk.cells.push_back(Cell{i, j});
        Move m = next_move(params, i, j);
        walk.moves.push_back(m);
        switch (m.kind) {
            case MoveKind::east: break;
            case MoveKind::south_east: ++i; break;
            case MoveKind::north_east: --i; break;
        }
        j = (j + 1) % ell;
    }
    if (i != 0 || j != 0) {
        throw_internal("cycle walk ends at (" + std::to_string(i) + ", " + std::to_string(j) +
                       ") instead of closing at (0, 0)");
    }
    return walk;
}

Permutation build_cycle_permutation(uint32_t n, uint32_t s) {
    ConstructionParams params = derive_params(n, s);
    CycleWalk walk = cycle_walk(params);
    std::vector<uint32_t> values;
    values.reserve(n);
    for (const Cell& c : walk.cells) values.push_back(matrix_entry(params, c.row, c.col));
    // Permutation's constructor re-checks that the walk covered every residue.
    return Permutation(n, std::move(values));
}

std::pair<uint32_t, uint32_t> sigma_bounds(uint32_t n, uint32_t k) {
    if (n < 2 || n > kMaxModulus) throw_param("modulus out of range: " + std::to_string(n));
    if (k < 1) throw_param("window size k must be positive");
    if (k >= n) return {1, 1};  // some image pair always lands within k
    if (k == 1) return {n, n};  // image distances are never < 1
    uint32_t upper = (n - 1) / k;
    uint32_t lower = upper >= 2 ? upper - 1 : 1;
    return {lower, upper};
}

std::pair<uint32_t, uint32_t> sigma_bounds_multi(uint32_t n, uint32_t k, uint32_t r) {
    if (n < 2 || n > kMaxModulus) throw_param("modulus out of range: " + std::to_string(n));
    if (!(1 < r && r < k && k < n)) {
        throw_param("bounds need 1 < r < k < n, got n = " + std::to_string(n) + ", k = " + std::to_string(k) +
                    ", r = " + std::to_string(r));
    }
    uint32_t upper = (uint32_t)(((uint64_t)r * n - 1) / k);
    return {upper - 1, upper};  // r >= 2 and k < n make upper >= 2
}

bool multi_construction_condition(uint32_t n, uint32_t k, uint32_t s, uint32_t r) {
    if (!(1 <= r && r < k && k < n)) {
        throw_param("condition needs 1 <= r < k < n, got n = " + std::to_string(n) + ", k = " +
                    std::to_string(k) + ", r = " + std::to_string(r));
    }
    ConstructionParams p = derive_params(n, s);  // validates s
    uint64_t lhs = (uint64_t)k * (s + 1) + p.d - 3;
    uint64_t rhs = (uint64_t)r * n - 1;
    return lhs <= rhs;
}

Construction construct_pairwise(uint32_t n, uint32_t k) {
    if (n < 3 || n > kMaxModulus) throw_param("modulus out of range: " + std::to_string(n));
    if (k < 2 || k >= n) {
        throw_param("pairwise construction needs 2 <= k < n, got k = " + std::to_string(k) + ", n = " +
                    std::to_string(n));
    }
    uint32_t s = (n - 1) / k - 1;  // k < n keeps the quotient >= 1
    if (s <= 1) {
        // Any permutation is (1, k)-clash-free; nothing to build.
        return Construction{std::max(s, 1u), true, Permutation::identity(n)};
    }
    ConstructionParams p = derive_params(n, s);
    if (p.ell <= k) {
        throw_internal("expected ell > k at the guaranteed separation, got ell = " + std::to_string(p.ell));
    }
    return Construction{s, false, invert(build_cycle_permutation(n, s))};
}

Construction construct_multi(uint32_t n, uint32_t k, uint32_t r) {
    if (n < 2 || n > kMaxModulus) throw_param("modulus out of range: " + std::to_string(n));
    if (!(1 < r && r < k && k < n)) {
        throw_param("multi construction needs 1 < r < k < n, got n = " + std::to_string(n) + ", k = " +
                    std::to_string(k) + ", r = " + std::to_string(r));
    }
    uint32_t s = sigma_bounds_multi(n, k, r).first;  // floor((rn-1)/k) - 1, always >= 1 here
    if (!multi_construction_condition(n, k, s, r)) {
        throw_internal("construction condition unexpectedly fails at n = " + std::to_string(n) + ", k = " +
                       std::to_string(k) + ", r = " + std::to_string(r) + ", s = " + std::to_string(s));
    }
    return Construction{s, false, invert(build_cycle_permutation(n, s))};
}

}  // namespace clashfree
