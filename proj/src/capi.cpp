// extern "C" surface over the core. Handles are heap-allocated wrappers;
// exceptions are mapped to status codes with a thread-local message.

#include "mcx.h"

#include <cstring>
#include <string>

#include "mcx/formulas.hpp"
#include "mcx/homology.hpp"
#include "mcx/json_io.hpp"
#include "mcx/report.hpp"

using namespace mcx;

struct mcx_graph {
    Multigraph g;
};
struct mcx_complex {
    SimplicialComplex k;
};
struct mcx_homotopy {
    HomotopyClass c;
};
struct mcx_certificate {
    CertPtr trace;
};
struct mcx_reduce_result {
    ReduceOutcome outcome;
};

namespace {

thread_local std::string g_last_error;

mcx_status status_of(const Error& e) {
    g_last_error = e.what();
    switch (e.code()) {
        case ErrorCode::InvalidArgument: return MCX_ERROR_INVALID_ARGUMENT;
        case ErrorCode::Parse: return MCX_ERROR_PARSE;
        case ErrorCode::UnknownId: return MCX_ERROR_UNKNOWN_ID;
        case ErrorCode::DuplicateId: return MCX_ERROR_DUPLICATE_ID;
        case ErrorCode::SelfLoop: return MCX_ERROR_SELF_LOOP;
        case ErrorCode::DanglingEndpoint: return MCX_ERROR_DANGLING_ENDPOINT;
        case ErrorCode::Precondition: return MCX_ERROR_PRECONDITION;
        case ErrorCode::Budget: return MCX_ERROR_BUDGET;
        case ErrorCode::NotSimple: return MCX_ERROR_NOT_SIMPLE;
        case ErrorCode::Malformed: return MCX_ERROR_MALFORMED;
        case ErrorCode::Internal: return MCX_ERROR_INTERNAL;
    }
    return MCX_ERROR_INTERNAL;
}

template <typename Fn>
mcx_status guarded(Fn&& fn) {
    try {
        fn();
        return MCX_OK;
    } catch (const Error& e) {
        return status_of(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return MCX_ERROR_INTERNAL;
    }
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

Strategy parse_strategy(const char* strategy) {
    if (!strategy || std::string(strategy).empty()) return Strategy::Auto;
    auto s = strategy_from_name(strategy);
    if (!s) fail(ErrorCode::InvalidArgument, std::string("unknown strategy '") + strategy + "'");
    return *s;
}

} // namespace

extern "C" {

const char* mcx_last_error(void) { return g_last_error.c_str(); }

const char* mcx_status_name(mcx_status status) {
    switch (status) {
        case MCX_OK: return "ok";
        case MCX_ERROR_INVALID_ARGUMENT: return "invalid_argument";
        case MCX_ERROR_PARSE: return "parse";
        case MCX_ERROR_UNKNOWN_ID: return "unknown_id";
        case MCX_ERROR_DUPLICATE_ID: return "duplicate_id";
        case MCX_ERROR_SELF_LOOP: return "self_loop";
        case MCX_ERROR_DANGLING_ENDPOINT: return "dangling_endpoint";
        case MCX_ERROR_PRECONDITION: return "precondition";
        case MCX_ERROR_BUDGET: return "budget";
        case MCX_ERROR_NOT_SIMPLE: return "not_simple";
        case MCX_ERROR_MALFORMED: return "malformed";
        case MCX_ERROR_INTERNAL: return "internal";
    }
    return "unknown";
}

void mcx_string_free(char* s) { delete[] s; }

mcx_status mcx_graph_from_json(const char* json_text, mcx_graph** out) {
    return guarded([&] {
        if (!json_text || !out) fail(ErrorCode::InvalidArgument, "null argument");
        *out = new mcx_graph{io::graph_from_json(io::parse(json_text))};
    });
}

mcx_status mcx_graph_generate(const char* spec_json, mcx_graph** out) {
    return guarded([&] {
        if (!spec_json || !out) fail(ErrorCode::InvalidArgument, "null argument");
        auto spec = io::tiling_spec_from_json(io::parse(spec_json));
        *out = new mcx_graph{tilings::generate(spec)};
    });
}

char* mcx_graph_to_json(const mcx_graph* g) {
    return g ? copy_string(io::dump(io::graph_to_json(g->g))) : nullptr;
}

char* mcx_graph_canonical_key(const mcx_graph* g) {
    return g ? copy_string(g->g.canonical_key()) : nullptr;
}

size_t mcx_graph_vertex_count(const mcx_graph* g) { return g ? g->g.vertex_count() : 0; }
size_t mcx_graph_edge_count(const mcx_graph* g) { return g ? g->g.edge_count() : 0; }
void mcx_graph_free(mcx_graph* g) { delete g; }

mcx_status mcx_matching_complex(const mcx_graph* g, int size_cap, mcx_complex** out) {
    return guarded([&] {
        if (!g || !out) fail(ErrorCode::InvalidArgument, "null argument");
        std::optional<int> cap;
        if (size_cap >= 0) cap = size_cap;
        *out = new mcx_complex{SimplicialComplex::matching_complex(g->g, cap)};
    });
}

char* mcx_complex_to_json(const mcx_complex* k) {
    return k ? copy_string(io::dump(io::complex_to_json(k->k))) : nullptr;
}

int mcx_complex_dim(const mcx_complex* k) { return k ? k->k.dim() : -1; }
void mcx_complex_free(mcx_complex* k) { delete k; }

mcx_status mcx_complex_homology_json(const mcx_complex* k, char** out) {
    return guarded([&] {
        if (!k || !out) fail(ErrorCode::InvalidArgument, "null argument");
        HomologyProfile profile = reduced_homology(k->k);
        *out = copy_string(io::dump(io::homology_to_json(profile, euler_characteristic(k->k))));
    });
}

mcx_status mcx_graph_homology_json(const mcx_graph* g, char** out) {
    return guarded([&] {
        if (!g || !out) fail(ErrorCode::InvalidArgument, "null argument");
        SimplicialComplex k = SimplicialComplex::matching_complex(g->g);
        HomologyProfile profile = reduced_homology(k);
        *out = copy_string(io::dump(io::homology_to_json(profile, euler_characteristic(k))));
    });
}

mcx_status mcx_reduce(const mcx_graph* g, const char* strategy, size_t budget,
                      mcx_reduce_result** out) {
    return guarded([&] {
        if (!g || !out) fail(ErrorCode::InvalidArgument, "null argument");
        *out = new mcx_reduce_result{reduce(g->g, parse_strategy(strategy),
                                            budget == 0 ? kDefaultReduceBudget : budget)};
    });
}

mcx_status mcx_reduce_spec(const char* spec_json, const char* strategy, size_t budget,
                           mcx_reduce_result** out) {
    return guarded([&] {
        if (!spec_json || !out) fail(ErrorCode::InvalidArgument, "null argument");
        auto spec = io::tiling_spec_from_json(io::parse(spec_json));
        *out = new mcx_reduce_result{reduce_spec(spec, parse_strategy(strategy),
                                                 budget == 0 ? kDefaultReduceBudget : budget)};
    });
}

int mcx_reduce_result_is_partial(const mcx_reduce_result* r) {
    return r && std::holds_alternative<Partial>(r->outcome) ? 1 : 0;
}

int mcx_reduce_result_budget_exhausted(const mcx_reduce_result* r) {
    if (!r) return 0;
    const Partial* p = std::get_if<Partial>(&r->outcome);
    return p && p->budget_exhausted ? 1 : 0;
}

size_t mcx_reduce_result_nodes(const mcx_reduce_result* r) {
    if (!r) return 0;
    if (const Reduced* red = std::get_if<Reduced>(&r->outcome)) return red->nodes;
    return std::get<Partial>(r->outcome).nodes;
}

mcx_homotopy* mcx_reduce_result_class(const mcx_reduce_result* r) {
    if (!r) return nullptr;
    const Reduced* red = std::get_if<Reduced>(&r->outcome);
    return red ? new mcx_homotopy{red->cls} : nullptr;
}

mcx_certificate* mcx_reduce_result_certificate(const mcx_reduce_result* r) {
    if (!r) return nullptr;
    const Reduced* red = std::get_if<Reduced>(&r->outcome);
    return red ? new mcx_certificate{red->trace} : nullptr;
}

char* mcx_reduce_result_stuck_graph_json(const mcx_reduce_result* r) {
    if (!r) return nullptr;
    const Partial* p = std::get_if<Partial>(&r->outcome);
    return p ? copy_string(io::dump(io::graph_to_json(p->stuck))) : nullptr;
}

void mcx_reduce_result_free(mcx_reduce_result* r) { delete r; }

char* mcx_homotopy_to_text(const mcx_homotopy* c) {
    return c ? copy_string(c->c.to_text()) : nullptr;
}

char* mcx_homotopy_to_json(const mcx_homotopy* c) {
    return c ? copy_string(io::dump(io::homotopy_to_json(c->c))) : nullptr;
}

int mcx_homotopy_equals(const mcx_homotopy* a, const mcx_homotopy* b) {
    return a && b && a->c == b->c ? 1 : 0;
}

void mcx_homotopy_free(mcx_homotopy* c) { delete c; }

char* mcx_certificate_to_json(const mcx_certificate* c) {
    return c && c->trace ? copy_string(io::dump(io::certificate_to_json(*c->trace))) : nullptr;
}

mcx_status mcx_certificate_from_json(const char* json_text, mcx_certificate** out) {
    return guarded([&] {
        if (!json_text || !out) fail(ErrorCode::InvalidArgument, "null argument");
        *out = new mcx_certificate{io::certificate_from_json(io::parse(json_text))};
    });
}

mcx_status mcx_certificate_verify(const mcx_certificate* c, int* ok) {
    return guarded([&] {
        if (!c || !c->trace || !ok) fail(ErrorCode::InvalidArgument, "null argument");
        *ok = verify_certificate(*c->trace) ? 1 : 0;
    });
}

void mcx_certificate_free(mcx_certificate* c) { delete c; }

mcx_status mcx_fibonacci(long long n, char** out) {
    return guarded([&] {
        if (!out) fail(ErrorCode::InvalidArgument, "null argument");
        *out = copy_string(formulas::fibonacci(n).str());
    });
}

mcx_status mcx_triangle_homotopy(int t, mcx_homotopy** out) {
    return guarded([&] {
        if (!out) fail(ErrorCode::InvalidArgument, "null argument");
        *out = new mcx_homotopy{formulas::triangle_homotopy(t)};
    });
}

mcx_status mcx_pentagon_homotopy(int t, mcx_homotopy** out) {
    return guarded([&] {
        if (!out) fail(ErrorCode::InvalidArgument, "null argument");
        *out = new mcx_homotopy{formulas::pentagon_homotopy(t)};
    });
}

mcx_status mcx_pendant_pentagon_homotopy(int t, mcx_homotopy** out) {
    return guarded([&] {
        if (!out) fail(ErrorCode::InvalidArgument, "null argument");
        *out = new mcx_homotopy{formulas::pendant_pentagon_homotopy(t)};
    });
}

mcx_status mcx_dim_interval(int t, int* lo, int* hi) {
    return guarded([&] {
        if (!lo || !hi) fail(ErrorCode::InvalidArgument, "null argument");
        auto interval = formulas::dim_interval(t);
        *lo = interval.lo;
        *hi = interval.hi;
    });
}

mcx_status mcx_f_of_t(int t, int* out) {
    return guarded([&] {
        if (!out) fail(ErrorCode::InvalidArgument, "null argument");
        *out = formulas::f_of_t(t);
    });
}

mcx_status mcx_sphere_table_json(int t_max, const char* source, char** out) {
    return guarded([&] {
        if (!out || !source) fail(ErrorCode::InvalidArgument, "null argument");
        std::string which = source;
        formulas::SphereCountTable table;
        if (which == "gf")
            table = formulas::triangle_counts_via_gf(t_max);
        else if (which == "recursion")
            table = formulas::triangle_counts_via_recursion(t_max);
        else
            fail(ErrorCode::InvalidArgument, "source must be 'gf' or 'recursion'");
        *out = copy_string(io::dump(io::sphere_table_rows(table)));
    });
}

mcx_status mcx_triangle_table_json(int t_max, char** out) {
    return guarded([&] {
        if (!out) fail(ErrorCode::InvalidArgument, "null argument");
        if (t_max < 2) fail(ErrorCode::InvalidArgument, "table starts at t = 2");
        auto gf = formulas::triangle_counts_via_gf(t_max);
        auto rec = formulas::triangle_counts_via_recursion(t_max);
        const auto& golden = formulas::golden_triangle_rows();
        nlohmann::json rows = nlohmann::json::array();
        bool any_mismatch = false;
        for (int t = 2; t <= t_max; ++t) {
            nlohmann::json row;
            row["t"] = t;
            nlohmann::json spheres = nlohmann::json::object();
            for (const auto& [d, c] : gf.row(t)) spheres[std::to_string(d)] = io::bigint_to_json(c);
            row["spheres"] = spheres;
            row["class"] = formulas::triangle_homotopy(t).to_text();
            bool routes_agree = gf.row(t) == rec.row(t);
            row["routes_agree"] = routes_agree;
            auto it = golden.find(t);
            if (it != golden.end()) {
                bool golden_ok = gf.row(t) == it->second;
                row["golden_match"] = golden_ok;
                any_mismatch = any_mismatch || !golden_ok;
            }
            any_mismatch = any_mismatch || !routes_agree;
            rows.push_back(row);
        }
        nlohmann::json result{{"rows", rows}, {"mismatch", any_mismatch}};
        *out = copy_string(io::dump(result));
    });
}

mcx_status mcx_verify_run_json(const char* spec_json, const char* channels, size_t budget,
                               long long seed, int has_seed, char** report_json,
                               int* all_agree) {
    return guarded([&] {
        if (!spec_json || !channels || !report_json || !all_agree)
            fail(ErrorCode::InvalidArgument, "null argument");
        auto spec = io::tiling_spec_from_json(io::parse(spec_json));
        auto sel = channels_from_csv(channels);
        std::optional<long long> seed_opt;
        if (has_seed) seed_opt = seed;
        RunReport report = run_verification(spec, sel, budget == 0 ? kDefaultReduceBudget : budget,
                                            Strategy::Auto, seed_opt);
        *report_json = copy_string(io::dump(report.body));
        *all_agree = report.all_agree ? 1 : 0;
    });
}

} // extern "C"
