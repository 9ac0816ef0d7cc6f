#include "core/search.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "core/construct.hpp"
#include "core/error.hpp"
#include "core/verify.hpp"

namespace clashfree {

namespace {

// Depth-first assignment of pi(t) for t = 1, 2, ... with pi(0) = 0 and
// candidate values tried ascending, so the first completion is the
// lexicographically least witness. A prefix is abandoned as soon as some
// fully-decided domain window of s consecutive positions has r+1 of its
// images inside a window of k consecutive residues; every one of the n
// domain windows is decided by the time position n-1 is assigned.
struct Dfs {
    uint32_t n, s, k, r;
    std::vector<uint32_t> perm;
    std::vector<bool> used;
    std::vector<uint32_t> images;
    uint64_t nodes = 0;
    const std::atomic<bool>* stop = nullptr;

    Dfs(uint32_t n_, uint32_t s_, uint32_t k_, uint32_t r_)
        : n(n_), s(s_), k(k_), r(r_), perm(n_, 0), used(n_, false) {
        images.reserve(s_);
    }

    bool window_ok(uint32_t x) {
        images.clear();
        for (uint32_t t = 0; t < s; ++t) images.push_back(perm[(x + t) % n]);
        std::sort(images.begin(), images.end());
        return detail::max_images_in_window(images, k, n) <= r;
    }

    bool windows_ok_after(uint32_t t) {
        if (t + 1 >= s && !window_ok(t + 1 - s)) return false;
        if (t == n - 1) {
            for (uint32_t x = n - s + 1; x < n; ++x)
                if (!window_ok(x)) return false;
        }
        return true;
    }

    bool run(uint32_t t) {
        if (t == n) return true;
        for (uint32_t v = 0; v < n; ++v) {
            if (used[v]) continue;
            if (stop && stop->load(std::memory_order_relaxed)) return false;
            perm[t] = v;
            used[v] = true;
            ++nodes;
            if (windows_ok_after(t) && run(t + 1)) return true;
            used[v] = false;
        }
        return false;
    }
};

void check_cap(uint32_t n, uint32_t cap) {
    if (n > cap) {
        throw_resource("n = " + std::to_string(n) + " exceeds the search cap " + std::to_string(cap) +
                       "; raise the cap to force the search");
    }
}

void check_search_params(uint32_t n, uint32_t s, uint32_t k, uint32_t r, uint32_t cap) {
    if (n < 2 || n > kMaxModulus) throw_param("modulus out of range: " + std::to_string(n));
    if (s < 1 || k < 1 || r < 1) throw_param("need s, k and r >= 1");
    if (s > n || k > n) {
        throw_param("thresholds s = " + std::to_string(s) + ", k = " + std::to_string(k) +
                    " must not exceed n = " + std::to_string(n));
    }
    check_cap(n, cap);
}

uint32_t resolve_cap(const SearchLimits& limits, uint32_t r) {
    if (limits.cap != 0) return limits.cap;
    return r == 1 ? kDefaultPairSearchCap : kDefaultMultiSearchCap;
}

std::optional<Permutation> search_single(uint32_t n, uint32_t s, uint32_t k, uint32_t r, uint64_t* nodes) {
    Dfs dfs(n, s, k, r);
    dfs.perm[0] = 0;
    dfs.used[0] = true;
    bool found = dfs.run(1);
    if (nodes) *nodes += dfs.nodes;
    if (!found) return std::nullopt;
    return Permutation(n, std::move(dfs.perm));
}

std::optional<Permutation> search_parallel(uint32_t n, uint32_t s, uint32_t k, uint32_t r, uint32_t threads,
                                           uint64_t* nodes) {
    std::atomic<bool> found{false};
    std::atomic<uint64_t> total_nodes{0};
    std::mutex result_mutex;
    std::optional<std::vector<uint32_t>> result;

    uint32_t worker_count = std::min(threads, n - 1);
    std::vector<std::thread> workers;
    workers.reserve(worker_count);
    for (uint32_t w = 0; w < worker_count; ++w) {
        workers.emplace_back([&, w] {
            // Fan out over the value placed at position 1.
            for (uint32_t v = 1 + w; v < n; v += worker_count) {
                if (found.load(std::memory_order_relaxed)) break;
                Dfs dfs(n, s, k, r);
                dfs.stop = &found;
                dfs.perm[0] = 0;
                dfs.used[0] = true;
                dfs.perm[1] = v;
                dfs.used[v] = true;
                ++dfs.nodes;
                bool ok = dfs.windows_ok_after(1) && dfs.run(2);
                total_nodes += dfs.nodes;
                if (ok) {
                    std::lock_guard<std::mutex> lock(result_mutex);
                    if (!result) result = dfs.perm;
                    found.store(true, std::memory_order_relaxed);
                }
            }
        });
    }
    for (auto& t : workers) t.join();
    if (nodes) *nodes += total_nodes.load();
    if (!result) return std::nullopt;
    return Permutation(n, std::move(*result));
}

// Probe one past the upper bound when possible, then settle the value by
// ascending while witnesses keep appearing or descending until one does.
SigmaResult settle_sigma(uint32_t n, uint32_t k, uint32_t r, uint32_t upper, bool probe,
                         const SearchLimits& limits) {
    uint64_t nodes = 0;
    uint32_t probe_s = 0;
    bool probe_found = false;
    std::optional<Permutation> probe_witness;
    if (probe && upper + 1 <= n) {
        probe_s = upper + 1;
        probe_witness = exists_clash_free(n, probe_s, k, r, limits, &nodes);
        probe_found = probe_witness.has_value();
    }
    uint32_t value;
    std::optional<Permutation> witness;
    if (probe_found) {
        value = probe_s;
        witness = std::move(probe_witness);
        for (uint32_t s = probe_s + 1; s <= n; ++s) {
            auto w = exists_clash_free(n, s, k, r, limits, &nodes);
            if (!w) break;
            value = s;
            witness = std::move(w);
        }
    } else {
        for (uint32_t s = upper;; --s) {
            auto w = exists_clash_free(n, s, k, r, limits, &nodes);
            if (w) {  // s <= r always succeeds, so this terminates
                value = s;
                witness = std::move(w);
                break;
            }
        }
    }
    return SigmaResult{n, k, r, value, std::move(*witness), nodes, probe_s, probe_found};
}

}  // namespace

std::optional<Permutation> exists_clash_free(uint32_t n, uint32_t s, uint32_t k, uint32_t r,
                                             const SearchLimits& limits, uint64_t* nodes) {
    uint32_t cap = resolve_cap(limits, r);
    check_search_params(n, s, k, r, cap);
    if (s <= r) return Permutation::identity(n);  // r+1 residues never fit s consecutive ones
    if (limits.threads > 1 && n > 2) return search_parallel(n, s, k, r, limits.threads, nodes);
    return search_single(n, s, k, r, nodes);
}

SigmaResult sigma_exact(uint32_t n, uint32_t k, const SearchLimits& limits) {
    if (n < 2 || n > kMaxModulus) throw_param("modulus out of range: " + std::to_string(n));
    if (k < 1) throw_param("need k >= 1");
    check_cap(n, resolve_cap(limits, 1));
    uint32_t upper = sigma_bounds(n, k).second;
    // Distances never exceed n/2, so any k >= n behaves exactly like k = n.
    SigmaResult res = settle_sigma(n, std::min(k, n), 1, upper, true, limits);
    res.k = k;
    return res;
}

SigmaResult sigma_exact_multi(uint32_t n, uint32_t k, uint32_t r, const SearchLimits& limits) {
    if (r == 1) return sigma_exact(n, k, limits);
    if (n < 2 || n > kMaxModulus) throw_param("modulus out of range: " + std::to_string(n));
    if (k < 1) throw_param("need k >= 1");
    check_cap(n, resolve_cap(limits, r));
    if (r >= k || r >= n) {
        // A window of k consecutive residues holds at most min(k, n) distinct
        // images, so no r+1 of them can ever crowd one: sigma is n.
        return SigmaResult{n, k, r, n, Permutation::identity(n), 0, 0, false};
    }
    if (k < n) {
        uint32_t upper = sigma_bounds_multi(n, k, r).second;
        return settle_sigma(n, k, r, upper, true, limits);
    }
    // k = n: no two-sided interval applies; descend from s = n without a probe.
    SigmaResult res = settle_sigma(n, n, r, n, false, limits);
    res.k = k;
    return res;
}

}  // namespace clashfree
