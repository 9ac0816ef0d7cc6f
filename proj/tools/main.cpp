// Command line front end. Subcommands emit one line of JSON on stdout
// (render and matrix emit plain text) and one-line diagnostics on stderr.
// Exit codes: 0 success or clash-free, 1 clash found, 2 parameter error,
// 3 resource cap exceeded, 4 internal error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "clashfree.h"
#include "json.hpp"

using nlohmann::ordered_json;

namespace {

constexpr int kExitClash = 1;
constexpr int kExitParam = 2;
constexpr int kExitResource = 3;
constexpr int kExitInternal = 4;

int exit_code_of(cf_status st) {
    switch (st) {
        case CF_OK: return 0;
        case CF_ERR_PARAM: return kExitParam;
        case CF_ERR_RESOURCE: return kExitResource;
        case CF_ERR_INTERNAL: return kExitInternal;
    }
    return kExitInternal;
}

int fail(cf_status st) {
    std::cerr << "error: " << cf_last_error() << "\n";
    return exit_code_of(st);
}

int fail_msg(const std::string& msg, int code = kExitParam) {
    std::cerr << "error: " << msg << "\n";
    return code;
}

struct PermDeleter {
    void operator()(cf_perm* p) const { cf_perm_free(p); }
};
using PermPtr = std::unique_ptr<cf_perm, PermDeleter>;

struct WitnessDeleter {
    void operator()(cf_witness_list* l) const { cf_witness_list_free(l); }
};
using WitnessPtr = std::unique_ptr<cf_witness_list, WitnessDeleter>;

std::vector<uint32_t> perm_values(const cf_perm* p) {
    std::vector<uint32_t> values(cf_perm_n(p));
    cf_perm_values(p, values.data());
    return values;
}

ordered_json perm_json(const cf_perm* p) {
    ordered_json j;
    j["n"] = cf_perm_n(p);
    j["perm"] = perm_values(p);
    return j;
}

// Accepts the permutation text form {"n":..., "perm":[...]}; extra fields
// are ignored so construct output can be piped straight back in.
int parse_perm(const std::string& text, PermPtr& out) {
    ordered_json j = ordered_json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("n") || !j.contains("perm") ||
        !j["n"].is_number_unsigned() || !j["perm"].is_array()) {
        return fail_msg("input must be a JSON object {\"n\":..., \"perm\":[...]}");
    }
    uint64_t n = j["n"].get<uint64_t>();
    if (n > UINT32_MAX) return fail_msg("n out of range");
    std::vector<uint32_t> values;
    values.reserve(j["perm"].size());
    for (const auto& v : j["perm"]) {
        if (!v.is_number_unsigned() || v.get<uint64_t>() > UINT32_MAX) {
            return fail_msg("perm entries must be residues");
        }
        values.push_back(v.get<uint32_t>());
    }
    if (values.size() != n) return fail_msg("perm must hold exactly n values");
    cf_perm* p = nullptr;
    cf_status st = cf_perm_create((uint32_t)n, values.data(), &p);
    if (st != CF_OK) return fail(st);
    out.reset(p);
    return 0;
}

int read_perm(const std::string& input_path, PermPtr& out) {
    std::string text;
    if (!input_path.empty()) {
        std::ifstream in(input_path);
        if (!in) return fail_msg("cannot read " + input_path);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    } else {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    }
    return parse_perm(text, out);
}

ordered_json witness_json(const cf_witness_list* list, size_t idx) {
    std::vector<uint32_t> subset(cf_witness_size(list, idx));
    cf_witness_subset(list, idx, subset.data());
    uint32_t dspan = 0, ispan = 0;
    cf_witness_spans(list, idx, &dspan, &ispan);
    ordered_json j;
    j["subset"] = subset;
    j["domain_span"] = dspan;
    j["image_span"] = ispan;
    return j;
}

void emit(const ordered_json& j) { std::cout << j.dump() << "\n"; }

struct CommonArgs {
    uint32_t n = 0, s = 0, k = 0, r = 1;
    uint32_t cap = 0, threads = 1;
    std::string input;
};

int run_construct(const CommonArgs& a) {
    uint32_t s = 0, d = 0, ell = 0;
    int trivial = 0;
    cf_perm* p = nullptr;
    cf_status st = a.r == 1 ? cf_construct_pairwise(a.n, a.k, &s, &trivial, &p)
                            : cf_construct_multi(a.n, a.k, a.r, &s, &trivial, &p);
    if (st != CF_OK) return fail(st);
    PermPtr perm(p);
    ordered_json j;
    j["n"] = a.n;
    j["k"] = a.k;
    j["r"] = a.r;
    j["s"] = s;
    if (trivial) {
        j["d"] = nullptr;  // the identity shortcut runs no matrix walk
        j["ell"] = nullptr;
    } else {
        st = cf_derive_params(a.n, s, &d, &ell);
        if (st != CF_OK) return fail(st);
        j["d"] = d;
        j["ell"] = ell;
    }
    j["trivial"] = trivial != 0;
    j["perm"] = perm_values(perm.get());
    emit(j);
    return 0;
}

int run_verify_one(const CommonArgs& a, bool all) {
    PermPtr perm;
    int rc = read_perm(a.input, perm);
    if (rc != 0) return rc;
    cf_witness_list* list = nullptr;
    cf_status st = a.r == 1 ? cf_find_pair_clashes(perm.get(), a.s, a.k, &list)
                            : cf_find_multi_clashes(perm.get(), a.s, a.k, a.r, &list);
    if (st != CF_OK) return fail(st);
    WitnessPtr witnesses(list);
    size_t count = cf_witness_count(list);
    ordered_json j;
    j["n"] = cf_perm_n(perm.get());
    j["s"] = a.s;
    j["k"] = a.k;
    j["r"] = a.r;
    j["clash_free"] = count == 0;
    if (count > 0) {
        if (all) {
            ordered_json arr = ordered_json::array();
            for (size_t i = 0; i < count; ++i) arr.push_back(witness_json(list, i));
            j["witnesses"] = arr;
        } else {
            j["witness"] = witness_json(list, 0);
        }
    }
    emit(j);
    return count == 0 ? 0 : kExitClash;
}

int run_verify_random(const CommonArgs& a, uint32_t count, uint64_t seed) {
    if (a.n == 0) return fail_msg("--random needs --n for the permutation size");
    uint32_t clash_free = 0;
    for (uint32_t t = 0; t < count; ++t) {
        cf_perm* p = nullptr;
        cf_status st = cf_perm_random(a.n, seed + t, &p);
        if (st != CF_OK) return fail(st);
        PermPtr perm(p);
        int ok = 0;
        st = a.r == 1 ? cf_is_clash_free(perm.get(), a.s, a.k, &ok)
                      : cf_is_clash_free_multi(perm.get(), a.s, a.k, a.r, &ok);
        if (st != CF_OK) return fail(st);
        clash_free += ok;
    }
    ordered_json j;
    j["n"] = a.n;
    j["s"] = a.s;
    j["k"] = a.k;
    j["r"] = a.r;
    j["tested"] = count;
    j["seed"] = seed;
    j["clash_free_count"] = clash_free;
    j["clash_count"] = count - clash_free;
    emit(j);
    return clash_free == count ? 0 : kExitClash;
}

int run_sigma(const CommonArgs& a) {
    uint32_t value = 0, probe_s = 0;
    int probe_found = 0;
    uint64_t nodes = 0;
    cf_perm* w = nullptr;
    cf_status st = a.r == 1
                       ? cf_sigma_exact(a.n, a.k, a.cap, a.threads, &value, &w, &nodes, &probe_s, &probe_found)
                       : cf_sigma_exact_multi(a.n, a.k, a.r, a.cap, a.threads, &value, &w, &nodes, &probe_s,
                                              &probe_found);
    if (st != CF_OK) return fail(st);
    PermPtr witness(w);

    uint32_t lower = 0, upper = 0;
    std::string note;
    if (a.r == 1) {
        st = cf_sigma_bounds(a.n, a.k, &lower, &upper);
        if (st != CF_OK) return fail(st);
    } else if (a.r >= a.k || a.r >= a.n) {
        lower = upper = a.n;  // every permutation qualifies at any s
    } else if (a.k >= a.n) {
        lower = a.r;  // only the trivial bracket applies here
        upper = a.n;
        note = "no two-sided interval is known for k >= n; showing the trivial bracket";
    } else {
        st = cf_sigma_bounds_multi(a.n, a.k, a.r, &lower, &upper);
        if (st != CF_OK) return fail(st);
    }

    ordered_json j;
    j["n"] = a.n;
    j["k"] = a.k;
    j["r"] = a.r;
    j["value"] = value;
    j["lower"] = lower;
    j["upper"] = upper;
    j["probe_s"] = probe_s;
    j["probe_found"] = probe_found != 0;
    if (!note.empty()) j["note"] = note;
    j["witness"] = perm_json(witness.get());
    emit(j);
    return 0;
}

int run_bounds(const CommonArgs& a) {
    uint32_t lower = 0, upper = 0;
    cf_status st = a.r == 1 ? cf_sigma_bounds(a.n, a.k, &lower, &upper)
                            : cf_sigma_bounds_multi(a.n, a.k, a.r, &lower, &upper);
    if (st != CF_OK) return fail(st);
    ordered_json j;
    j["n"] = a.n;
    j["k"] = a.k;
    j["r"] = a.r;
    j["lower"] = lower;
    j["upper"] = upper;
    emit(j);
    return 0;
}

int run_render(const CommonArgs& a, uint32_t cell_px, bool no_grid, bool heatmap, const std::string& out_path) {
    PermPtr perm;
    int rc = read_perm(a.input, perm);
    if (rc != 0) return rc;
    cf_render_options options;
    cf_render_options_init(&options);
    options.cell_px = cell_px;
    options.grid = no_grid ? 0 : 1;
    options.heatmap = heatmap ? 1 : 0;
    options.highlight_r = a.r;
    char* svg = nullptr;
    cf_status st = cf_render_svg(perm.get(), a.s, a.k, &options, &svg);
    if (st != CF_OK) return fail(st);
    std::string text(svg);
    cf_string_free(svg);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) return fail_msg("cannot write " + out_path);
        out << text;
    }
    return 0;
}

int run_matrix(const CommonArgs& a) {
    uint32_t d = 0, ell = 0;
    cf_status st = cf_derive_params(a.n, a.s, &d, &ell);
    if (st != CF_OK) return fail(st);
    std::ostringstream out;
    for (uint32_t i = 0; i < d; ++i) {
        for (uint32_t jcol = 0; jcol < ell; ++jcol) {
            uint32_t v = 0;
            st = cf_matrix_entry(a.n, a.s, i, jcol, &v);
            if (st != CF_OK) return fail(st);
            if (jcol) out << ' ';
            out << v;
        }
        out << '\n';
    }
    std::vector<uint8_t> moves(a.n);
    st = cf_walk_moves(a.n, a.s, moves.data());
    if (st != CF_OK) return fail(st);
    static const char* names[3] = {"E", "SE", "NE"};
    for (uint32_t t = 0; t < a.n; ++t) {
        if (t) out << ' ';
        out << names[moves[t] <= 2 ? moves[t] : 0];
    }
    out << '\n';
    std::cout << out.str();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"clash-free permutations of Z_n: construction, verification, exact search, rendering"};
    app.require_subcommand(1);
    CommonArgs a;

    auto* construct = app.add_subcommand("construct", "build a clash-free permutation for n and k");
    construct->add_option("--n", a.n, "modulus")->required();
    construct->add_option("--k", a.k, "image window size")->required();
    construct->add_option("--r", a.r, "crowding threshold (1 = pairwise)");

    auto* verify = app.add_subcommand("verify", "check a permutation for clashes");
    verify->add_option("--s", a.s, "domain window size")->required();
    verify->add_option("--k", a.k, "image window size")->required();
    verify->add_option("--r", a.r, "crowding threshold (1 = pairwise)");
    auto* input_opt = verify->add_option("--input", a.input, "permutation file (default: stdin)");
    bool all = false;
    verify->add_flag("--all", all, "list every witness instead of the first");
    uint32_t random_count = 0;
    uint64_t seed = 1;
    auto* random_opt = verify->add_option("--random", random_count, "check this many seeded random permutations");
    verify->add_option("--seed", seed, "seed for --random");
    auto* n_opt = verify->add_option("--n", a.n, "permutation size for --random");
    random_opt->excludes(input_opt);
    random_opt->needs(n_opt);

    auto* sigma = app.add_subcommand("sigma", "exact largest separation by exhaustive search");
    sigma->add_option("--n", a.n, "modulus")->required();
    sigma->add_option("--k", a.k, "image window size")->required();
    sigma->add_option("--r", a.r, "crowding threshold (1 = pairwise)");
    sigma->add_option("--cap", a.cap, "largest n the search accepts (0 = default)");
    sigma->add_option("--threads", a.threads, "search worker threads");

    auto* bounds = app.add_subcommand("bounds", "known interval for the largest separation");
    bounds->add_option("--n", a.n, "modulus")->required();
    bounds->add_option("--k", a.k, "image window size")->required();
    bounds->add_option("--r", a.r, "crowding threshold (1 = pairwise)");

    auto* render = app.add_subcommand("render", "draw the rectangle picture as SVG");
    render->add_option("--s", a.s, "domain window size")->required();
    render->add_option("--k", a.k, "image window size")->required();
    render->add_option("--r", a.r, "heatmap threshold");
    render->add_option("--input", a.input, "permutation file (default: stdin)");
    uint32_t cell_px = 20;
    bool no_grid = false, heatmap = false;
    std::string out_path;
    render->add_option("--cell-px", cell_px, "pixels per torus unit");
    render->add_flag("--no-grid", no_grid, "drop the dotted unit grid");
    render->add_flag("--heatmap", heatmap, "shade points covered more than r times");
    render->add_option("--out", out_path, "write the SVG here instead of stdout");

    auto* matrix = app.add_subcommand("matrix", "print the construction matrix and walk moves");
    matrix->add_option("--n", a.n, "modulus")->required();
    matrix->add_option("--s", a.s, "separation target")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // prints help or the parse diagnostic
        return code == 0 ? 0 : kExitParam;
    }

    if (a.r < 1) return fail_msg("--r must be at least 1");

    if (construct->parsed()) return run_construct(a);
    if (verify->parsed()) {
        if (random_opt->count() > 0) return run_verify_random(a, random_count, seed);
        return run_verify_one(a, all);
    }
    if (sigma->parsed()) return run_sigma(a);
    if (bounds->parsed()) return run_bounds(a);
    if (render->parsed()) return run_render(a, cell_px, no_grid, heatmap, out_path);
    if (matrix->parsed()) return run_matrix(a);
    return fail_msg("no subcommand given");
}
