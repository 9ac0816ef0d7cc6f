#include "core/verify.hpp"

#include <algorithm>
#include <string>

#include "core/error.hpp"

namespace clashfree {

namespace {

void check_pair_params(uint32_t s, uint32_t k) {
    if (s < 1 || k < 1) throw_param("distance thresholds must be at least 1");
}

void check_multi_params(uint32_t n, uint32_t s, uint32_t k, uint32_t r) {
    if (s < 1 || k < 1) throw_param("distance thresholds must be at least 1");
    if (r < 1) throw_param("crowding threshold r must be at least 1");
    if (s > n || k > n) {
        throw_param("thresholds s = " + std::to_string(s) + ", k = " + std::to_string(k) +
                    " must not exceed n = " + std::to_string(n));
    }
}

struct WindowEntry {
    uint32_t img;
    uint32_t index;
};

// Calls fn(x, entries, a, count) for every domain window start x and every
// image-window start a whose k-window holds count of the window's images;
// fn returning false stops the whole sweep. Returns false when stopped.
template <typename Fn>
bool sweep_windows(const Permutation& pi, uint32_t s, uint32_t k, Fn&& fn) {
    uint32_t n = pi.n();
    std::vector<WindowEntry> w(s);
    for (uint32_t x = 0; x < n; ++x) {
        for (uint32_t t = 0; t < s; ++t) {
            uint32_t index = (x + t) % n;
            w[t] = WindowEntry{pi(index), index};
        }
        std::sort(w.begin(), w.end(), [](const WindowEntry& a, const WindowEntry& b) { return a.img < b.img; });
        uint32_t b = 0;
        for (uint32_t a = 0; a < s; ++a) {
            uint64_t hi = (uint64_t)w[a].img + k - 1;
            while (b < a + s) {
                uint64_t img = (uint64_t)w[b % s].img + (b >= s ? n : 0);
                if (img > hi) break;
                ++b;
            }
            if (!fn(x, w, a, b - a)) return false;
        }
    }
    return true;
}

uint64_t binomial_capped(uint32_t n, uint32_t t) {
    if (t > n) return 0;
    t = std::min(t, n - t);
    uint64_t c = 1;
    for (uint32_t i = 1; i <= t; ++i) {
        unsigned __int128 prod = (unsigned __int128)c * (n - t + i) / i;
        if (prod > (unsigned __int128)UINT64_MAX) return UINT64_MAX;
        c = (uint64_t)prod;
    }
    return c;
}

// Lexicographic enumeration of all t-subsets of [0, n); fn returning false stops.
template <typename Fn>
void for_each_subset(uint32_t n, uint32_t t, Fn&& fn) {
    if (t > n || t == 0) return;
    std::vector<uint32_t> idx(t);
    for (uint32_t i = 0; i < t; ++i) idx[i] = i;
    for (;;) {
        if (!fn(idx)) return;
        uint32_t i = t;
        while (i > 0 && idx[i - 1] == n - t + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (uint32_t j = i; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
}

ClashWitness make_witness(const Permutation& pi, uint32_t n, std::vector<uint32_t> subset) {
    std::vector<uint32_t> images;
    images.reserve(subset.size());
    for (uint32_t i : subset) images.push_back(pi(i));
    std::sort(images.begin(), images.end());
    uint32_t dspan = span_of_sorted(subset, n);
    uint32_t ispan = span_of_sorted(images, n);
    return ClashWitness{ResidueSet(n, std::move(subset)), dspan, ispan};
}

}  // namespace

std::vector<ClashWitness> find_pair_clashes(const Permutation& pi, uint32_t s, uint32_t k) {
    check_pair_params(s, k);
    uint32_t n = pi.n();
    uint32_t dmax = std::min(s - 1, n - 1);
    std::vector<std::pair<uint32_t, uint32_t>> pairs;
    for (uint32_t i = 0; i < n; ++i) {
        for (uint32_t delta = 1; delta <= dmax; ++delta) {
            uint32_t j = (i + delta) % n;
            if (circ_dist(pi(i), pi(j), n) < k) {
                pairs.emplace_back(std::min(i, j), std::max(i, j));
            }
        }
    }
    // Pairs at distance < n/2 were generated from both endpoints.
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    std::vector<ClashWitness> out;
    out.reserve(pairs.size());
    for (auto [a, b] : pairs) out.push_back(make_witness(pi, n, {a, b}));
    return out;
}

bool is_clash_free(const Permutation& pi, uint32_t s, uint32_t k) {
    check_pair_params(s, k);
    uint32_t n = pi.n();
    uint32_t dmax = std::min(s - 1, n - 1);
    for (uint32_t i = 0; i < n; ++i) {
        for (uint32_t delta = 1; delta <= dmax; ++delta) {
            uint32_t j = (i + delta) % n;
            if (circ_dist(pi(i), pi(j), n) < k) return false;
        }
    }
    return true;
}

std::vector<ClashWitness> find_multi_clashes(const Permutation& pi, uint32_t s, uint32_t k, uint32_t r) {
    uint32_t n = pi.n();
    check_multi_params(n, s, k, r);
    std::vector<ClashWitness> out;
    if ((uint64_t)r + 1 > s) return out;  // r+1 distinct residues never fit s consecutive ones

    std::vector<std::vector<uint32_t>> subsets;
    std::vector<uint32_t> best;   // lexicographic minimum in window best_x
    std::vector<uint32_t> cand;
    uint32_t best_x = n;          // sentinel: no pending window
    sweep_windows(pi, s, k, [&](uint32_t x, const std::vector<WindowEntry>& w, uint32_t a, uint32_t count) {
        if (count < r + 1) return true;
        cand.clear();
        for (uint32_t j = a; j < a + count; ++j) cand.push_back(w[j % s].index);
        std::sort(cand.begin(), cand.end());
        cand.resize(r + 1);  // the r+1 smallest indices form the lex-least subset
        if (best_x != x) {
            if (best_x != n) subsets.push_back(best);
            best = cand;
            best_x = x;
        } else if (cand < best) {
            best = cand;
        }
        return true;
    });
    if (best_x != n) subsets.push_back(best);

    std::sort(subsets.begin(), subsets.end());
    subsets.erase(std::unique(subsets.begin(), subsets.end()), subsets.end());
    out.reserve(subsets.size());
    for (auto& subset : subsets) out.push_back(make_witness(pi, n, std::move(subset)));
    return out;
}

bool is_clash_free_multi(const Permutation& pi, uint32_t s, uint32_t k, uint32_t r) {
    uint32_t n = pi.n();
    check_multi_params(n, s, k, r);
    if ((uint64_t)r + 1 > s) return true;
    return sweep_windows(pi, s, k, [&](uint32_t, const std::vector<WindowEntry>&, uint32_t, uint32_t count) {
        return count < r + 1;
    });
}

bool oracle_multi(const Permutation& pi, uint32_t s, uint32_t k, uint32_t r, uint64_t max_subsets) {
    uint32_t n = pi.n();
    check_multi_params(n, s, k, r);
    uint32_t t = r + 1 <= n ? r + 1 : 0;
    if (t == 0) return true;
    if (binomial_capped(n, t) > max_subsets) {
        throw_resource("subset count exceeds cap " + std::to_string(max_subsets));
    }
    bool clash_free = true;
    std::vector<uint32_t> images(t);
    for_each_subset(n, t, [&](const std::vector<uint32_t>& idx) {
        if (span_of_sorted(idx, n) < s) {
            for (uint32_t a = 0; a < t; ++a) images[a] = pi(idx[a]);
            std::sort(images.begin(), images.end());
            if (span_of_sorted(images, n) < k) {
                clash_free = false;
                return false;
            }
        }
        return true;
    });
    return clash_free;
}

std::vector<ClashWitness> oracle_enumerate(const Permutation& pi, uint32_t s, uint32_t k, uint32_t r,
                                           uint64_t max_subsets) {
    uint32_t n = pi.n();
    check_multi_params(n, s, k, r);
    std::vector<ClashWitness> out;
    uint32_t t = r + 1 <= n ? r + 1 : 0;
    if (t == 0) return out;
    if (binomial_capped(n, t) > max_subsets) {
        throw_resource("subset count exceeds cap " + std::to_string(max_subsets));
    }
    std::vector<uint32_t> images(t);
    for_each_subset(n, t, [&](const std::vector<uint32_t>& idx) {
        if (span_of_sorted(idx, n) < s) {
            for (uint32_t a = 0; a < t; ++a) images[a] = pi(idx[a]);
            std::sort(images.begin(), images.end());
            if (span_of_sorted(images, n) < k) out.push_back(make_witness(pi, n, idx));
        }
        return true;
    });
    return out;
}

namespace detail {

uint32_t max_images_in_window(const std::vector<uint32_t>& sorted_images, uint32_t k, uint32_t n) {
    uint32_t m = (uint32_t)sorted_images.size();
    if (m == 0 || k < 1) throw_param("window query needs a nonempty set and k >= 1");
    uint32_t best = 0, b = 0;
    for (uint32_t a = 0; a < m; ++a) {
        uint64_t hi = (uint64_t)sorted_images[a] + k - 1;
        while (b < a + m) {
            uint64_t img = (uint64_t)sorted_images[b % m] + (b >= m ? n : 0);
            if (img > hi) break;
            ++b;
        }
        best = std::max(best, b - a);
    }
    return best;
}

}  // namespace detail

}  // namespace clashfree
