#pragma once

// Geometric picture of a permutation: each index i owns an s x k (width x
// height) rectangle centered at (i, pi(i)) on the n x n torus. The
// permutation is (s, k, r)-clash-free exactly when no point of the torus
// is covered by more than r rectangles. Coverage is counted on the
// half-integer lattice (coordinates doubled, a 2n x 2n grid), which is
// fine enough to see every overlap. Rendering emits plain SVG 1.1 with
// byte-deterministic output.

#include <cstdint>
#include <string>
#include <vector>

#include "core/ring.hpp"

namespace clashfree {

// Coverage needs a (2n)^2 count table; beyond this it is refused.
inline constexpr uint32_t kMaxCoverageModulus = 2048;

class CoverageGrid {
public:
    CoverageGrid(uint32_t n, std::vector<uint32_t> counts);

    uint32_t n() const { return n_; }
    uint32_t dim() const { return 2 * n_; }  // grid points per axis

    /// Count at doubled coordinates (u, v), u, v < 2n.
    uint32_t at(uint32_t u, uint32_t v) const;

    uint32_t max_count() const;
    uint64_t total() const;  // equals n * (2s-1) * (2k-1) for its parameters

    const std::vector<uint32_t>& counts() const { return counts_; }

private:
    uint32_t n_;
    std::vector<uint32_t> counts_;  // row-major, counts_[u * 2n + v]
};

/// Rectangle-coverage counts of every half-integer point for the given
/// permutation and rectangle dimensions. Requires 1 <= s, k <= n and
/// n <= kMaxCoverageModulus (resource error beyond).
CoverageGrid coverage_counts(const Permutation& pi, uint32_t s, uint32_t k);

/// An axis-aligned piece of a torus rectangle, in doubled coordinates
/// (so a full unwrapped rectangle is 2s wide and 2k tall).
struct Fragment {
    uint32_t x, y, w, h;

    bool operator==(const Fragment&) const = default;
};

/// The 1, 2 or 4 pieces of the rectangle centered at doubled point
/// (cx, cy) after cutting at the torus seams. Piece areas always sum to
/// (2s)(2k). Requires cx, cy < 2n and 1 <= s, k <= n.
std::vector<Fragment> rect_fragments(uint32_t n, uint32_t cx, uint32_t cy, uint32_t s, uint32_t k);

struct RenderOptions {
    uint32_t cell_px = 20;     // pixels per torus unit
    bool grid = true;          // dotted unit grid lines
    bool heatmap = false;      // shade points covered more than highlight_r times
    uint32_t highlight_r = 1;  // heatmap threshold
};

/// SVG drawing of the rectangle picture, y axis pointing up. Output bytes
/// depend only on the arguments. Each index contributes one group
/// <g class="r"> holding its rectangle pieces and a center dot.
std::string render_svg(const Permutation& pi, uint32_t s, uint32_t k, const RenderOptions& options = {});

}  // namespace clashfree
