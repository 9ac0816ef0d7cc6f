#include <cstdint>
#include <random>
#include <string>

#include "core/construct.hpp"
#include "core/error.hpp"
#include "core/render.hpp"
#include "core/ring.hpp"
#include "core/rng.hpp"
#include "core/verify.hpp"
#include "doctest.h"

using namespace clashfree;

namespace {

size_t count_occurrences(const std::string& text, const std::string& needle) {
    size_t count = 0;
    for (size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++count;
    return count;
}

}  // namespace

TEST_CASE("coverage counts on pinned instances") {
    CoverageGrid tiny = coverage_counts(Permutation::identity(3), 1, 1);
    CHECK(tiny.max_count() == 1);
    CHECK(tiny.total() == 3);
    CHECK(tiny.at(0, 0) == 1);
    CHECK(tiny.at(0, 1) == 0);

    CoverageGrid ref = coverage_counts(build_cycle_permutation(20, 3), 5, 3);
    CHECK(ref.max_count() == 1);
    CHECK(ref.total() == 20ull * 9 * 5);

    CoverageGrid id6 = coverage_counts(Permutation::identity(6), 3, 3);
    CHECK(id6.max_count() == 3);
    CHECK(id6.at(0, 0) == 3);
    CHECK(id6.at(1, 1) == 2);
    CHECK(id6.total() == 6ull * 5 * 5);
}

TEST_CASE("coverage validates its inputs") {
    Permutation id = Permutation::identity(6);
    CHECK_THROWS_AS(coverage_counts(id, 0, 3), Error);
    CHECK_THROWS_AS(coverage_counts(id, 3, 7), Error);
    CHECK_THROWS_AS(coverage_counts(Permutation::identity(kMaxCoverageModulus + 1), 2, 2), Error);
    CoverageGrid grid = coverage_counts(id, 2, 2);
    CHECK_THROWS_AS(grid.at(12, 0), Error);
    CHECK_THROWS_AS(grid.at(0, 12), Error);
}

TEST_CASE("coverage total counts every rectangle point") {
    std::mt19937_64 gen(31);
    for (int t = 0; t < 25; ++t) {
        uint32_t n = 2 + (uint32_t)(gen() % 14);
        Permutation pi = random_permutation(n, gen());
        uint32_t s = 1 + (uint32_t)(gen() % n);
        uint32_t k = 1 + (uint32_t)(gen() % n);
        CHECK(coverage_counts(pi, s, k).total() == (uint64_t)n * (2 * s - 1) * (2 * k - 1));
    }
}

TEST_CASE("maximum coverage mirrors the clash detector") {
    std::mt19937_64 gen(37);
    for (int t = 0; t < 60; ++t) {
        uint32_t n = 3 + (uint32_t)(gen() % 10);
        Permutation pi = random_permutation(n, gen());
        uint32_t s = 1 + (uint32_t)(gen() % n);
        uint32_t k = 1 + (uint32_t)(gen() % n);
        CoverageGrid grid = coverage_counts(pi, s, k);
        for (uint32_t r = 1; r <= 4; ++r) {
            CHECK((grid.max_count() <= r) == is_clash_free_multi(pi, s, k, r));
        }
    }
}

TEST_CASE("rectangle fragments tile the full rectangle") {
    std::mt19937_64 gen(41);
    for (int t = 0; t < 200; ++t) {
        uint32_t n = 2 + (uint32_t)(gen() % 12);
        uint32_t s = 1 + (uint32_t)(gen() % n);
        uint32_t k = 1 + (uint32_t)(gen() % n);
        uint32_t cx = (uint32_t)(gen() % (2 * n)), cy = (uint32_t)(gen() % (2 * n));
        auto pieces = rect_fragments(n, cx, cy, s, k);
        CHECK(pieces.size() >= 1);
        CHECK(pieces.size() <= 4);
        uint64_t area = 0;
        for (const Fragment& f : pieces) {
            CHECK(f.w >= 1);
            CHECK(f.h >= 1);
            CHECK(f.x + f.w <= 2 * n);
            CHECK(f.y + f.h <= 2 * n);
            area += (uint64_t)f.w * f.h;
        }
        CHECK(area == 4ull * s * k);
    }
    // A centered rectangle away from the seams stays in one piece.
    CHECK(rect_fragments(10, 10, 10, 2, 3) ==
          std::vector<Fragment>{Fragment{8, 7, 4, 6}});
    // Wrapping at the origin cuts both axes.
    CHECK(rect_fragments(10, 0, 0, 2, 2).size() == 4);
    CHECK_THROWS_AS(rect_fragments(10, 20, 0, 2, 2), Error);
}

TEST_CASE("svg output is byte-deterministic") {
    Permutation pi = build_cycle_permutation(20, 3);
    std::string a = render_svg(pi, 5, 3);
    std::string b = render_svg(pi, 5, 3);
    CHECK(a == b);
    CHECK_FALSE(a.empty());
    RenderOptions small;
    small.cell_px = 7;
    CHECK(render_svg(pi, 5, 3, small) != a);
}

TEST_CASE("svg structure") {
    std::string tiny = render_svg(Permutation::identity(2), 1, 1);
    CHECK(count_occurrences(tiny, "<g class=\"r\"") == 2);
    CHECK(count_occurrences(tiny, "<circle") == 2);
    CHECK(tiny.find("<?xml version=\"1.0\"") == 0);
    CHECK(tiny.rfind("</svg>\n") == tiny.size() - 7);

    std::string ref = render_svg(build_cycle_permutation(20, 3), 5, 3);
    CHECK(count_occurrences(ref, "<g class=\"r\"") == 20);
    CHECK(count_occurrences(ref, "data-i=\"19\"") == 1);

    RenderOptions no_grid;
    no_grid.grid = false;
    std::string plain = render_svg(Permutation::identity(2), 1, 1, no_grid);
    CHECK(plain.find("stroke-dasharray") == std::string::npos);
    CHECK(tiny.find("stroke-dasharray") != std::string::npos);
}

TEST_CASE("heatmap shades only over-covered points") {
    RenderOptions opts;
    opts.heatmap = true;
    opts.highlight_r = 1;

    // The clash-free reference drawing has nothing to shade.
    std::string clean = render_svg(build_cycle_permutation(20, 3), 5, 3, opts);
    CHECK(clean.find("#f28e2b") == std::string::npos);
    CHECK(clean.find("#d62728") == std::string::npos);

    // The identity at (3, 3) has points of count 2 and 3.
    std::string hot = render_svg(Permutation::identity(6), 3, 3, opts);
    CHECK(hot.find("#f28e2b") != std::string::npos);
    CHECK(hot.find("#d62728") != std::string::npos);

    opts.highlight_r = 3;  // nothing exceeds the true maximum
    std::string capped = render_svg(Permutation::identity(6), 3, 3, opts);
    CHECK(capped.find("#f28e2b") == std::string::npos);
}

TEST_CASE("render validates its options") {
    Permutation id = Permutation::identity(4);
    RenderOptions opts;
    opts.cell_px = 0;
    CHECK_THROWS_AS(render_svg(id, 2, 2, opts), Error);
    opts.cell_px = 600;
    CHECK_THROWS_AS(render_svg(id, 2, 2, opts), Error);
    opts.cell_px = 20;
    opts.heatmap = true;
    opts.highlight_r = 0;
    CHECK_THROWS_AS(render_svg(id, 2, 2, opts), Error);
    CHECK_THROWS_AS(render_svg(id, 5, 2, RenderOptions{}), Error);
}
