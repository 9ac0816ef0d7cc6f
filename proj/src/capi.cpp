// C binding over the core library. Every entry point catches exceptions,
// stores the message in a thread-local slot and maps the error kind to a
// status code; out parameters are written only on success.

#include "clashfree.h"

#include <cstring>
#include <new>
#include <string>

#include "core/construct.hpp"
#include "core/error.hpp"
#include "core/render.hpp"
#include "core/ring.hpp"
#include "core/rng.hpp"
#include "core/search.hpp"
#include "core/verify.hpp"

using namespace clashfree;

struct cf_perm {
    Permutation value;
};

struct cf_witness_list {
    std::vector<ClashWitness> items;
};

struct cf_coverage {
    CoverageGrid grid;
};

namespace {

thread_local std::string g_last_error;

cf_status status_of(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::param: return CF_ERR_PARAM;
        case ErrorKind::resource: return CF_ERR_RESOURCE;
        case ErrorKind::internal: return CF_ERR_INTERNAL;
    }
    return CF_ERR_INTERNAL;
}

template <typename Fn>
cf_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return CF_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return status_of(e.kind());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return CF_ERR_RESOURCE;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return CF_ERR_INTERNAL;
    }
}

void require(bool cond, const char* what) {
    if (!cond) throw_param(what);
}

cf_perm* wrap(Permutation p) { return new cf_perm{std::move(p)}; }

const ClashWitness& witness_at(const cf_witness_list* list, size_t idx) {
    require(list != nullptr, "witness list is null");
    if (idx >= list->items.size()) throw_param("witness index out of range");
    return list->items[idx];
}

}  // namespace

extern "C" {

const char* cf_last_error(void) { return g_last_error.c_str(); }

cf_status cf_perm_create(uint32_t n, const uint32_t* values, cf_perm** out) {
    return guarded([&] {
        require(values != nullptr && out != nullptr, "null pointer argument");
        *out = wrap(Permutation(n, std::vector<uint32_t>(values, values + n)));
    });
}

cf_status cf_perm_identity(uint32_t n, cf_perm** out) {
    return guarded([&] {
        require(out != nullptr, "null pointer argument");
        *out = wrap(Permutation::identity(n));
    });
}

cf_status cf_perm_random(uint32_t n, uint64_t seed, cf_perm** out) {
    return guarded([&] {
        require(out != nullptr, "null pointer argument");
        *out = wrap(random_permutation(n, seed));
    });
}

void cf_perm_free(cf_perm* p) { delete p; }

uint32_t cf_perm_n(const cf_perm* p) { return p ? p->value.n() : 0; }

uint32_t cf_perm_at(const cf_perm* p, uint32_t i) {
    if (!p || i >= p->value.n()) return UINT32_MAX;
    return p->value(i);
}

void cf_perm_values(const cf_perm* p, uint32_t* buf) {
    if (!p || !buf) return;
    std::memcpy(buf, p->value.values().data(), sizeof(uint32_t) * p->value.n());
}

cf_status cf_perm_translate(const cf_perm* p, uint32_t a, uint32_t b, cf_perm** out) {
    return guarded([&] {
        require(p != nullptr && out != nullptr, "null pointer argument");
        *out = wrap(translate(p->value, a, b));
    });
}

cf_status cf_perm_invert(const cf_perm* p, cf_perm** out) {
    return guarded([&] {
        require(p != nullptr && out != nullptr, "null pointer argument");
        *out = wrap(invert(p->value));
    });
}

cf_status cf_circ_dist(uint32_t i, uint32_t j, uint32_t n, uint32_t* out) {
    return guarded([&] {
        require(out != nullptr, "null pointer argument");
        *out = circ_dist(i, j, n);
    });
}

cf_status cf_span(uint32_t n, const uint32_t* members, size_t count, uint32_t* out) {
    return guarded([&] {
        require(members != nullptr && out != nullptr, "null pointer argument");
        *out = span(ResidueSet(n, std::vector<uint32_t>(members, members + count)));
    });
}

cf_status cf_derive_params(uint32_t n, uint32_t s, uint32_t* d, uint32_t* ell) {
    return guarded([&] {
        require(d != nullptr && ell != nullptr, "null pointer argument");
        ConstructionParams p = derive_params(n, s);
        *d = p.d;
        *ell = p.ell;
    });
}

cf_status cf_matrix_entry(uint32_t n, uint32_t s, uint32_t row, uint32_t col, uint32_t* out) {
    return guarded([&] {
        require(out != nullptr, "null pointer argument");
        *out = matrix_entry(derive_params(n, s), row, col);
    });
}

cf_status cf_walk_moves(uint32_t n, uint32_t s, uint8_t* moves) {
    return guarded([&] {
        require(moves != nullptr, "null pointer argument");
        CycleWalk walk = cycle_walk(derive_params(n, s));
        for (uint32_t t = 0; t < n; ++t) moves[t] = (uint8_t)walk.moves[t].kind;
    });
}

cf_status cf_build_cycle_permutation(uint32_t n, uint32_t s, cf_perm** out) {
    return guarded([&] {
        require(out != nullptr, "null pointer argument");
        *out = wrap(build_cycle_permutation(n, s));
    });
}

cf_status cf_sigma_bounds(uint32_t n, uint32_t k, uint32_t* lower, uint32_t* upper) {
    return guarded([&] {
        require(lower != nullptr && upper != nullptr, "null pointer argument");
        auto [lo, hi] = sigma_bounds(n, k);
        *lower = lo;
        *upper = hi;
    });
}

cf_status cf_sigma_bounds_multi(uint32_t n, uint32_t k, uint32_t r, uint32_t* lower, uint32_t* upper) {
    return guarded([&] {
        require(lower != nullptr && upper != nullptr, "null pointer argument");
        auto [lo, hi] = sigma_bounds_multi(n, k, r);
        *lower = lo;
        *upper = hi;
    });
}

cf_status cf_multi_construction_condition(uint32_t n, uint32_t k, uint32_t s, uint32_t r, int* holds) {
    return guarded([&] {
        require(holds != nullptr, "null pointer argument");
        *holds = multi_construction_condition(n, k, s, r) ? 1 : 0;
    });
}

cf_status cf_construct_pairwise(uint32_t n, uint32_t k, uint32_t* s_out, int* trivial, cf_perm** out) {
    return guarded([&] {
        require(s_out != nullptr && trivial != nullptr && out != nullptr, "null pointer argument");
        Construction c = construct_pairwise(n, k);
        *s_out = c.s;
        *trivial = c.trivial ? 1 : 0;
        *out = wrap(std::move(c.perm));
    });
}

cf_status cf_construct_multi(uint32_t n, uint32_t k, uint32_t r, uint32_t* s_out, int* trivial,
                             cf_perm** out) {
    return guarded([&] {
        require(s_out != nullptr && trivial != nullptr && out != nullptr, "null pointer argument");
        Construction c = construct_multi(n, k, r);
        *s_out = c.s;
        *trivial = c.trivial ? 1 : 0;
        *out = wrap(std::move(c.perm));
    });
}

void cf_witness_list_free(cf_witness_list* list) { delete list; }

size_t cf_witness_count(const cf_witness_list* list) { return list ? list->items.size() : 0; }

size_t cf_witness_size(const cf_witness_list* list, size_t idx) {
    if (!list || idx >= list->items.size()) return 0;
    return list->items[idx].subset.size();
}

cf_status cf_witness_subset(const cf_witness_list* list, size_t idx, uint32_t* buf) {
    return guarded([&] {
        require(buf != nullptr, "null pointer argument");
        const ClashWitness& w = witness_at(list, idx);
        std::memcpy(buf, w.subset.members().data(), sizeof(uint32_t) * w.subset.size());
    });
}

cf_status cf_witness_spans(const cf_witness_list* list, size_t idx, uint32_t* domain_span,
                           uint32_t* image_span) {
    return guarded([&] {
        require(domain_span != nullptr && image_span != nullptr, "null pointer argument");
        const ClashWitness& w = witness_at(list, idx);
        *domain_span = w.domain_span;
        *image_span = w.image_span;
    });
}

cf_status cf_is_clash_free(const cf_perm* p, uint32_t s, uint32_t k, int* clash_free) {
    return guarded([&] {
        require(p != nullptr && clash_free != nullptr, "null pointer argument");
        *clash_free = is_clash_free(p->value, s, k) ? 1 : 0;
    });
}

cf_status cf_find_pair_clashes(const cf_perm* p, uint32_t s, uint32_t k, cf_witness_list** out) {
    return guarded([&] {
        require(p != nullptr && out != nullptr, "null pointer argument");
        *out = new cf_witness_list{find_pair_clashes(p->value, s, k)};
    });
}

cf_status cf_is_clash_free_multi(const cf_perm* p, uint32_t s, uint32_t k, uint32_t r, int* clash_free) {
    return guarded([&] {
        require(p != nullptr && clash_free != nullptr, "null pointer argument");
        *clash_free = is_clash_free_multi(p->value, s, k, r) ? 1 : 0;
    });
}

cf_status cf_find_multi_clashes(const cf_perm* p, uint32_t s, uint32_t k, uint32_t r, cf_witness_list** out) {
    return guarded([&] {
        require(p != nullptr && out != nullptr, "null pointer argument");
        *out = new cf_witness_list{find_multi_clashes(p->value, s, k, r)};
    });
}

cf_status cf_oracle_multi(const cf_perm* p, uint32_t s, uint32_t k, uint32_t r, uint64_t max_subsets,
                          int* clash_free) {
    return guarded([&] {
        require(p != nullptr && clash_free != nullptr, "null pointer argument");
        uint64_t cap = max_subsets == 0 ? kDefaultOracleSubsetCap : max_subsets;
        *clash_free = oracle_multi(p->value, s, k, r, cap) ? 1 : 0;
    });
}

cf_status cf_oracle_enumerate(const cf_perm* p, uint32_t s, uint32_t k, uint32_t r, uint64_t max_subsets,
                              cf_witness_list** out) {
    return guarded([&] {
        require(p != nullptr && out != nullptr, "null pointer argument");
        uint64_t cap = max_subsets == 0 ? kDefaultOracleSubsetCap : max_subsets;
        *out = new cf_witness_list{oracle_enumerate(p->value, s, k, r, cap)};
    });
}

cf_status cf_exists_clash_free(uint32_t n, uint32_t s, uint32_t k, uint32_t r, uint32_t cap, uint32_t threads,
                               int* found, cf_perm** witness, uint64_t* nodes) {
    return guarded([&] {
        require(found != nullptr, "null pointer argument");
        SearchLimits limits{cap, threads};
        uint64_t local_nodes = 0;
        auto w = exists_clash_free(n, s, k, r, limits, nodes ? &local_nodes : nullptr);
        *found = w.has_value() ? 1 : 0;
        if (nodes) *nodes = local_nodes;
        if (witness && w) *witness = wrap(std::move(*w));
    });
}

cf_status cf_sigma_exact(uint32_t n, uint32_t k, uint32_t cap, uint32_t threads, uint32_t* value,
                         cf_perm** witness, uint64_t* nodes, uint32_t* probe_s, int* probe_found) {
    return guarded([&] {
        require(value != nullptr, "null pointer argument");
        SigmaResult res = sigma_exact(n, k, SearchLimits{cap, threads});
        *value = res.value;
        if (witness) *witness = wrap(std::move(res.witness));
        if (nodes) *nodes = res.nodes;
        if (probe_s) *probe_s = res.probe_s;
        if (probe_found) *probe_found = res.probe_found ? 1 : 0;
    });
}

cf_status cf_sigma_exact_multi(uint32_t n, uint32_t k, uint32_t r, uint32_t cap, uint32_t threads,
                               uint32_t* value, cf_perm** witness, uint64_t* nodes, uint32_t* probe_s,
                               int* probe_found) {
    return guarded([&] {
        require(value != nullptr, "null pointer argument");
        SigmaResult res = sigma_exact_multi(n, k, r, SearchLimits{cap, threads});
        *value = res.value;
        if (witness) *witness = wrap(std::move(res.witness));
        if (nodes) *nodes = res.nodes;
        if (probe_s) *probe_s = res.probe_s;
        if (probe_found) *probe_found = res.probe_found ? 1 : 0;
    });
}

cf_status cf_coverage_counts(const cf_perm* p, uint32_t s, uint32_t k, cf_coverage** out) {
    return guarded([&] {
        require(p != nullptr && out != nullptr, "null pointer argument");
        *out = new cf_coverage{coverage_counts(p->value, s, k)};
    });
}

void cf_coverage_free(cf_coverage* g) { delete g; }

uint32_t cf_coverage_dim(const cf_coverage* g) { return g ? g->grid.dim() : 0; }

cf_status cf_coverage_at(const cf_coverage* g, uint32_t u, uint32_t v, uint32_t* count) {
    return guarded([&] {
        require(g != nullptr && count != nullptr, "null pointer argument");
        *count = g->grid.at(u, v);
    });
}

uint32_t cf_coverage_max(const cf_coverage* g) { return g ? g->grid.max_count() : 0; }

uint64_t cf_coverage_total(const cf_coverage* g) { return g ? g->grid.total() : 0; }

void cf_render_options_init(cf_render_options* options) {
    if (!options) return;
    options->cell_px = 20;
    options->grid = 1;
    options->heatmap = 0;
    options->highlight_r = 1;
}

cf_status cf_render_svg(const cf_perm* p, uint32_t s, uint32_t k, const cf_render_options* options,
                        char** svg) {
    return guarded([&] {
        require(p != nullptr && svg != nullptr, "null pointer argument");
        RenderOptions opts;
        if (options) {
            opts.cell_px = options->cell_px;
            opts.grid = options->grid != 0;
            opts.heatmap = options->heatmap != 0;
            opts.highlight_r = options->highlight_r;
        }
        std::string text = render_svg(p->value, s, k, opts);
        char* buf = new char[text.size() + 1];
        std::memcpy(buf, text.c_str(), text.size() + 1);
        *svg = buf;
    });
}

void cf_string_free(char* s) { delete[] s; }

}  // extern "C"
