#include <algorithm>
#include <optional>
#include <vector>

#include "core/construct.hpp"
#include "core/error.hpp"
#include "core/ring.hpp"
#include "core/search.hpp"
#include "core/verify.hpp"
#include "doctest.h"

using namespace clashfree;

namespace {

// Exhaustive sigma: the largest s for which some permutation of Z_n is clash-free.
uint32_t sigma_brute(uint32_t n, uint32_t k, uint32_t r) {
    std::vector<uint32_t> values(n);
    for (uint32_t i = 0; i < n; ++i) values[i] = i;
    uint32_t best = 0;
    do {
        Permutation pi(n, values);
        uint32_t s = best;
        while (s < n && is_clash_free_multi(pi, s + 1, std::min(k, n), r)) ++s;
        best = std::max(best, s);
    } while (std::next_permutation(values.begin(), values.end()));
    return best;
}

}  // namespace

TEST_CASE("existence search finds known instances") {
    SearchLimits limits;
    limits.cap = 20;

    auto easy = exists_clash_free(6, 2, 6, 2, limits);
    REQUIRE(easy.has_value());
    CHECK(*easy == Permutation::identity(6));  // s <= r never clashes

    auto found = exists_clash_free(20, 5, 3, 1, limits);
    REQUIRE(found.has_value());
    CHECK(is_clash_free(*found, 5, 3));

    // sigma(6,2) = 2, so s = 3 has no solution.
    CHECK_FALSE(exists_clash_free(6, 3, 2, 1, limits).has_value());
}

TEST_CASE("existence search rejects bad parameters and large instances") {
    SearchLimits limits;
    CHECK_THROWS_AS(exists_clash_free(40, 3, 3, 1, limits), Error);  // over the default cap
    limits.cap = 5;
    CHECK_THROWS_AS(exists_clash_free(6, 3, 2, 1, limits), Error);
    limits.cap = 20;
    CHECK_THROWS_AS(exists_clash_free(6, 0, 2, 1, limits), Error);
    CHECK_THROWS_AS(exists_clash_free(6, 2, 2, 0, limits), Error);
}

TEST_CASE("exact sigma on pinned cases") {
    SearchLimits limits;
    limits.cap = 12;

    SigmaResult r7 = sigma_exact(7, 2, limits);
    CHECK(r7.value == 3);
    CHECK(r7.witness == Permutation(7, {0, 2, 4, 6, 1, 3, 5}));
    CHECK(is_clash_free(r7.witness, 3, 2));
    CHECK(r7.probe_s == 4);
    CHECK_FALSE(r7.probe_found);
    CHECK(r7.nodes > 0);

    CHECK(sigma_exact(8, 8, limits).value == 1);
    CHECK(sigma_exact(8, 1, limits).value == 8);
    CHECK(sigma_exact(8, 1, limits).witness == Permutation::identity(8));
}

TEST_CASE("exact sigma matches exhaustive search") {
    SearchLimits limits;
    limits.cap = 6;
    for (uint32_t n = 4; n <= 6; ++n) {
        for (uint32_t k = 1; k <= n + 1; ++k) {
            SigmaResult res = sigma_exact(n, k, limits);
            CHECK(res.value == sigma_brute(n, k, 1));
            CHECK(is_clash_free_multi(res.witness, res.value, std::min(k, n), 1));
            auto [lo, hi] = sigma_bounds(n, k);
            if (k >= 2 && k < n) {
                CHECK(res.value >= lo);
                CHECK(res.value <= hi);
            }
        }
    }
}

TEST_CASE("sigma witnesses are lexicographically least") {
    SearchLimits limits;
    limits.cap = 6;
    for (uint32_t n = 4; n <= 6; ++n) {
        for (uint32_t k = 2; k < n; ++k) {
            SigmaResult res = sigma_exact(n, k, limits);
            if (res.value >= n) continue;
            std::vector<uint32_t> values(n);
            for (uint32_t i = 0; i < n; ++i) values[i] = i;
            std::optional<Permutation> first;
            do {
                Permutation pi(n, values);
                if (is_clash_free(pi, res.value, k)) {
                    first = pi;
                    break;
                }
            } while (std::next_permutation(values.begin(), values.end()));
            REQUIRE(first.has_value());
            CHECK(res.witness == *first);
        }
    }
}

TEST_CASE("exact sigma for subset thresholds") {
    SearchLimits limits;
    limits.cap = 9;

    SigmaResult deg = sigma_exact_multi(6, 2, 3, limits);  // r >= k: everything is free
    CHECK(deg.value == 6);
    CHECK(deg.witness == Permutation::identity(6));

    SigmaResult one = sigma_exact_multi(7, 2, 1, limits);  // r = 1 is the pairwise problem
    CHECK(one.value == 3);
    CHECK(one.witness == Permutation(7, {0, 2, 4, 6, 1, 3, 5}));

    SigmaResult m = sigma_exact_multi(7, 3, 2, limits);
    auto [lo, hi] = sigma_bounds_multi(7, 3, 2);
    CHECK(m.value >= lo);
    CHECK(m.value <= hi);
    CHECK(is_clash_free_multi(m.witness, m.value, 3, 2));
    CHECK(m.value == sigma_brute(7, 3, 2));
}

TEST_CASE("exact multi sigma matches exhaustive search") {
    SearchLimits limits;
    limits.cap = 6;
    for (uint32_t n = 5; n <= 6; ++n) {
        for (uint32_t k = 3; k <= n; ++k) {
            SigmaResult res = sigma_exact_multi(n, k, 2, limits);
            CHECK(res.value == sigma_brute(n, k, 2));
            CHECK(is_clash_free_multi(res.witness, res.value, std::min(k, n), 2));
        }
    }
}

TEST_CASE("thread fan-out changes neither value nor outcome") {
    SearchLimits one;
    one.cap = 12;
    one.threads = 1;
    SearchLimits four = one;
    four.threads = 4;

    for (uint32_t k = 2; k <= 4; ++k) {
        SigmaResult a = sigma_exact(9, k, one);
        SigmaResult b = sigma_exact(9, k, four);
        CHECK(a.value == b.value);
        CHECK(is_clash_free(b.witness, b.value, k));
    }

    auto f1 = exists_clash_free(10, 4, 2, 1, one);
    auto f4 = exists_clash_free(10, 4, 2, 1, four);
    CHECK(f1.has_value() == f4.has_value());
}

TEST_CASE("sigma respects the size cap") {
    SearchLimits limits;  // default caps: 12 pairwise, 9 for subsets
    CHECK_THROWS_AS(sigma_exact(13, 3, limits), Error);
    CHECK_THROWS_AS(sigma_exact_multi(10, 4, 2, limits), Error);
    CHECK_NOTHROW(sigma_exact(12, 5, limits));
}
