#include "core/render.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "core/error.hpp"

namespace clashfree {

namespace {

void check_rect_params(uint32_t n, uint32_t s, uint32_t k) {
    if (s < 1 || k < 1 || s > n || k > n) {
        throw_param("rectangle dimensions need 1 <= s, k <= n, got s = " + std::to_string(s) +
                    ", k = " + std::to_string(k) + ", n = " + std::to_string(n));
    }
}

// Cuts the cyclic interval [start, start + len) of the given period into
// at most two linear pieces (start, piece_len).
std::vector<std::pair<uint32_t, uint32_t>> split_cyclic(uint32_t start, uint32_t len, uint32_t period) {
    start %= period;
    if (start + len <= period) return {{start, len}};
    return {{start, period - start}, {0, start + len - period}};
}

std::string px(uint64_t quarter_units, uint32_t cell_px) {
    // Quarter-unit coordinates scaled by cell_px are exact multiples of
    // 1/4 px; fractions are spelled out so no float formatting is involved.
    static const char* frac[4] = {"", ".25", ".5", ".75"};
    uint64_t t = quarter_units * cell_px;
    return std::to_string(t / 4) + frac[t % 4];
}

}  // namespace

CoverageGrid::CoverageGrid(uint32_t n, std::vector<uint32_t> counts) : n_(n), counts_(std::move(counts)) {
    if (n_ < 2 || n_ > kMaxCoverageModulus) throw_param("coverage modulus out of range");
    if (counts_.size() != (size_t)2 * n_ * 2 * n_) throw_internal("coverage table has the wrong size");
}

uint32_t CoverageGrid::at(uint32_t u, uint32_t v) const {
    if (u >= dim() || v >= dim()) throw_param("coverage coordinates must be < 2n");
    return counts_[(size_t)u * dim() + v];
}

uint32_t CoverageGrid::max_count() const { return *std::max_element(counts_.begin(), counts_.end()); }

uint64_t CoverageGrid::total() const {
    uint64_t sum = 0;
    for (uint32_t c : counts_) sum += c;
    return sum;
}

CoverageGrid coverage_counts(const Permutation& pi, uint32_t s, uint32_t k) {
    uint32_t n = pi.n();
    check_rect_params(n, s, k);
    if (n > kMaxCoverageModulus) {
        throw_resource("coverage grid for n = " + std::to_string(n) + " exceeds the supported maximum " +
                       std::to_string(kMaxCoverageModulus));
    }
    uint32_t dim = 2 * n;
    std::vector<uint32_t> counts((size_t)dim * dim, 0);
    for (uint32_t i = 0; i < n; ++i) {
        // Points within distance < s of 2i horizontally, < k of 2pi(i) vertically.
        uint32_t cx = 2 * i, cy = 2 * pi(i);
        for (uint32_t du = 0; du < 2 * s - 1; ++du) {
            uint32_t u = (cx + dim - (s - 1) + du) % dim;
            for (uint32_t dv = 0; dv < 2 * k - 1; ++dv) {
                uint32_t v = (cy + dim - (k - 1) + dv) % dim;
                ++counts[(size_t)u * dim + v];
            }
        }
    }
    return CoverageGrid(n, std::move(counts));
}

std::vector<Fragment> rect_fragments(uint32_t n, uint32_t cx, uint32_t cy, uint32_t s, uint32_t k) {
    check_rect_params(n, s, k);
    uint32_t dim = 2 * n;
    if (cx >= dim || cy >= dim) throw_param("rectangle center must have doubled coordinates < 2n");
    auto xs = split_cyclic((cx + dim - s) % dim, 2 * s, dim);
    auto ys = split_cyclic((cy + dim - k) % dim, 2 * k, dim);
    std::vector<Fragment> out;
    out.reserve(xs.size() * ys.size());
    for (auto [x, w] : xs)
        for (auto [y, h] : ys) out.push_back(Fragment{x, y, w, h});
    return out;
}

std::string render_svg(const Permutation& pi, uint32_t s, uint32_t k, const RenderOptions& options) {
    uint32_t n = pi.n();
    check_rect_params(n, s, k);
    uint32_t cell = options.cell_px;
    if (cell < 1 || cell > 512) throw_param("cell_px must lie in [1, 512]");
    if (options.heatmap && options.highlight_r < 1) throw_param("heatmap threshold must be at least 1");

    // All geometry is emitted in quarter-unit resolution; doubled
    // coordinates become 2 quarters, unit coordinates 4.
    uint32_t qdim = 4 * n;
    std::string w_px = px(qdim, cell);
    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + w_px + "\" height=\"" +
           w_px + "\" viewBox=\"0 0 " + w_px + " " + w_px + "\">\n";

    if (options.grid) {
        svg += "<g stroke=\"#999999\" stroke-width=\"0.5\" stroke-dasharray=\"1 3\">\n";
        for (uint32_t i = 1; i < n; ++i) {
            std::string p = px(4ull * i, cell);
            svg += "<line x1=\"" + p + "\" y1=\"0\" x2=\"" + p + "\" y2=\"" + w_px + "\"/>\n";
        }
        for (uint32_t i = 1; i < n; ++i) {
            std::string p = px(4ull * i, cell);
            svg += "<line x1=\"0\" y1=\"" + p + "\" x2=\"" + w_px + "\" y2=\"" + p + "\"/>\n";
        }
        svg += "</g>\n";
    }

    svg += "<g fill=\"#bfbfbf\" fill-opacity=\"0.6\" stroke=\"#000000\" stroke-width=\"1\">\n";
    for (uint32_t i = 0; i < n; ++i) {
        svg += "<g class=\"r\" data-i=\"" + std::to_string(i) + "\">\n";
        for (const Fragment& f : rect_fragments(n, 2 * i, 2 * pi(i), s, k)) {
            // Flip y: a piece spanning doubled [y, y+h] has its top edge at
            // doubled 2n - y - h from the SVG origin.
            svg += "<rect x=\"" + px(2ull * f.x, cell) + "\" y=\"" + px(2ull * (2 * n - f.y - f.h), cell) +
                   "\" width=\"" + px(2ull * f.w, cell) + "\" height=\"" + px(2ull * f.h, cell) + "\"/>\n";
        }
        svg += "<circle cx=\"" + px(4ull * i, cell) + "\" cy=\"" + px(4ull * (n - pi(i)), cell) +
               "\" r=\"2\" fill=\"#000000\" stroke=\"none\"/>\n";
        svg += "</g>\n";
    }
    svg += "</g>\n";

    if (options.heatmap) {
        CoverageGrid grid = coverage_counts(pi, s, k);
        uint32_t r = options.highlight_r;
        svg += "<g stroke=\"none\">\n";
        for (uint32_t u = 0; u < grid.dim(); ++u) {
            for (uint32_t v = 0; v < grid.dim(); ++v) {
                uint32_t c = grid.at(u, v);
                if (c <= r) continue;
                const char* color = c == r + 1 ? "#f28e2b" : "#d62728";
                // Half-unit square centered on the grid point, cut at seams.
                for (auto [x, w] : split_cyclic((2 * u + qdim - 1) % qdim, 2, qdim)) {
                    for (auto [y, h] : split_cyclic((2 * v + qdim - 1) % qdim, 2, qdim)) {
                        svg += "<rect x=\"" + px(x, cell) + "\" y=\"" + px(qdim - y - h, cell) +
                               "\" width=\"" + px(w, cell) + "\" height=\"" + px(h, cell) +
                               "\" fill=\"" + std::string(color) + "\"/>\n";
                    }
                }
            }
        }
        svg += "</g>\n";
    }

    svg += "<rect x=\"0\" y=\"0\" width=\"" + w_px + "\" height=\"" + w_px +
           "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    svg += "</svg>\n";
    return svg;
}

}  // namespace clashfree
