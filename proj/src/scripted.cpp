// Family-specific reduction scripts. The triangle script peels the first
// triangle pair off the tiling, the pentagon/pendant scripts run the mutual
// recursion between the tiling and its pendant variant, and the extended
// script cases on the last cycle length and the pendant path lengths.
// Recursion targets that are isomorphic to smaller family members are
// recorded as regenerated graphs; make_step checks the canonical keys.

#include <algorithm>

#include "reduce_internal.hpp"

namespace mcx::detail {
namespace {

using tilings::TilingSpec;

EdgeSet one(const std::string& id) { return EdgeSet({id}); }

std::string eid(const Multigraph& g, const std::string& u, const std::string& v) {
    auto id = g.edge_between(u, v);
    if (!id) fail(ErrorCode::Internal, "scripted step expected edge " + u + "-" + v);
    return *id;
}

} // namespace

CertPtr scripted_triangle_node(int t, ReduceContext& ctx) {
    Multigraph g = tilings::triangular(t);
    if (t <= 4) return auto_reduce_node(g, ctx);

    Multigraph g1 = g.delete_edges(one("a1b1"), true);
    Multigraph g2 = g1.delete_edges(one("a1b0"), true);
    Multigraph g4 = g2.contract_path({"a2", "a1", "a0", "b0", "b1"});
    std::string x = g4.parallel_edges("a2b1").at(0);

    CertPtr sub3 = scripted_triangle_node(t - 3, ctx);
    CertPtr sub5 = scripted_triangle_node(t - 5, ctx);

    CertPtr n3 = make_step(g4, {.rule = Rule::ParallelEdge, .e = "a2b1", .x = x},
                           {sub3, sub5}, ctx);
    CertPtr n2 = make_step(
        g2, {.rule = Rule::ContractPath4, .path = {"a2", "a1", "a0", "b0", "b1"}}, {n3}, ctx);
    CertPtr n1 = make_step(g1, {.rule = Rule::ClosedDominate, .e = "a0b0", .h = "a1b0"},
                           {n2, sub3}, ctx);
    return make_step(g, {.rule = Rule::OpenDominate, .e = "a0b0", .h = "a1b1"}, {n1}, ctx);
}

CertPtr scripted_pendant_node(int t, ReduceContext& ctx) {
    Multigraph g = tilings::pentagonal_pendant(t);
    if (t == 1) return auto_reduce_node(g, ctx);

    Multigraph cw = g.delete_closed_neighborhood("b0b1");
    CertPtr child_v = scripted_pendant_node(t - 1, ctx);
    CertPtr child_w;
    if (t == 2) {
        child_w = auto_reduce_node(cw, ctx); // a bare path
    } else {
        CertPtr inner = scripted_pendant_node(t - 2, ctx);
        child_w = make_step(cw, {.rule = Rule::PendantPath3, .path = {"a3", "a2", "a1", "a0"}},
                            {inner}, ctx);
    }
    // children in EN(u) order: a0b0 before b0b1
    return make_step(g, {.rule = Rule::SimplicialEdge, .e = "b0p0"}, {child_v, child_w}, ctx);
}

CertPtr scripted_pentagon_node(int t, ReduceContext& ctx) {
    Multigraph g = tilings::pentagonal(t);
    if (t == 1) return auto_reduce_node(g, ctx);

    Multigraph g1 = g.contract_path({"a2", "a1", "a0", "b0", "b1"});
    std::string x = g1.parallel_edges("a2b1").at(0);
    Multigraph c2 = g1.delete_closed_neighborhood("a2b1");

    CertPtr child1 = scripted_pentagon_node(t - 1, ctx);
    CertPtr child2 =
        t >= 3 ? scripted_pendant_node(t - 2, ctx) : auto_reduce_node(c2, ctx);
    CertPtr n1 = make_step(g1, {.rule = Rule::ParallelEdge, .e = "a2b1", .x = x},
                           {child1, child2}, ctx);
    return make_step(
        g, {.rule = Rule::ContractPath4, .path = {"a2", "a1", "a0", "b0", "b1"}}, {n1}, ctx);
}

// ---------------------------------------------------------------------------
// extended tilings

namespace {

struct ExtState {
    Multigraph g;
    std::vector<std::vector<std::string>> walks;
    std::vector<int> marked; // per cycle: position of the next shared edge
                             // (last cycle: the free marked edge)
    std::vector<std::string> tpath; // attachment first; tpath[0] = walk[marked]
    std::vector<std::string> upath; // upath[0] = walk[marked + 1]
};

void check_state(const ExtState& st) {
    std::size_t expect = 0;
    for (std::size_t i = 0; i < st.walks.size(); ++i) expect += st.walks[i].size();
    expect -= st.walks.size() - 1;
    expect += st.tpath.size() - 1 + st.upath.size() - 1;
    if (expect != st.g.edge_count())
        fail(ErrorCode::Internal, "extended state out of sync with its graph");
    for (const auto& w : st.walks)
        for (std::size_t m = 0; m < w.size(); ++m)
            eid(st.g, w[m], w[(m + 1) % w.size()]);
    for (const auto* p : {&st.tpath, &st.upath})
        for (std::size_t m = 0; m + 1 < p->size(); ++m) eid(st.g, (*p)[m], (*p)[m + 1]);
    const auto& w = st.walks.back();
    int j = st.marked.back();
    if (j < 2 || j + 1 >= static_cast<int>(w.size()))
        fail(ErrorCode::Internal, "marked edge overlaps the glue edge");
    if (st.tpath.front() != w[j] || st.upath.front() != w[j + 1])
        fail(ErrorCode::Internal, "pendant paths detached from the marked edge");
}

// Reverses the last cycle walk, exchanging the roles of the two marked-edge
// endpoints (and so of the two pendant paths).
void flip_last_cycle(ExtState& st) {
    auto& w = st.walks.back();
    int s = static_cast<int>(w.size());
    int j = st.marked.back();
    std::vector<std::string> rev(s);
    rev[0] = w[1];
    rev[1] = w[0];
    for (int m = 2; m < s; ++m) rev[m] = w[s + 1 - m];
    w = std::move(rev);
    st.marked.back() = s - j;
    std::swap(st.tpath, st.upath);
}

// After dropping the last cycle, hang the two leftover arcs off the new last
// cycle's marked edge, matching each arc to the endpoint it starts at.
void assign_paths(ExtState& st, std::vector<std::string> a, std::vector<std::string> b) {
    const auto& w = st.walks.back();
    int j = st.marked.back();
    if (a.front() == w[j] && b.front() == w[j + 1]) {
        st.tpath = std::move(a);
        st.upath = std::move(b);
    } else if (b.front() == w[j] && a.front() == w[j + 1]) {
        st.tpath = std::move(b);
        st.upath = std::move(a);
    } else {
        fail(ErrorCode::Internal, "leftover arcs do not anchor at the marked edge");
    }
}

std::vector<std::string> arc_down(const std::vector<std::string>& w, int to) {
    // w[0], w[s-1], w[s-2], ..., w[to]  (skipping the glue edge)
    std::vector<std::string> out = {w[0]};
    for (int m = static_cast<int>(w.size()) - 1; m >= to; --m) out.push_back(w[m]);
    return out;
}

std::vector<std::string> arc_up(const std::vector<std::string>& w, int to) {
    // w[1], w[2], ..., w[to]
    std::vector<std::string> out = {w[1]};
    for (int m = 2; m <= to; ++m) out.push_back(w[m]);
    return out;
}

std::vector<std::string> concat_tail(std::vector<std::string> head,
                                     const std::vector<std::string>& tail) {
    head.insert(head.end(), tail.begin() + 1, tail.end());
    return head;
}

CertPtr ext_reduce(ExtState st, ReduceContext& ctx);

// k >= 2 (after normalization): clip the pendant path tip.
CertPtr ext_long_path(const ExtState& st, ReduceContext& ctx) {
    int k = static_cast<int>(st.tpath.size()) - 1;
    const std::string e = eid(st.g, st.tpath[k - 1], st.tpath[k]);
    const std::string h = eid(st.g, st.tpath[k - 2], st.tpath[k - 1]);

    Multigraph c1 = st.g.delete_edges(one(h), true); // main part + floating edge
    Multigraph c2 = st.g.delete_closed_neighborhood(h);

    auto comps = c1.components();
    if (comps.size() != 2) fail(ErrorCode::Internal, "expected a split into two components");
    std::vector<CertPtr> split_children;
    for (const auto& comp : comps) {
        if (comp.edge_count() == 1 && comp.has_vertex(st.tpath[k])) {
            split_children.push_back(make_leaf(comp, Rule::BaseSingleEdges, ctx));
        } else {
            ExtState main = st;
            main.g = comp;
            main.tpath.resize(static_cast<std::size_t>(k - 1)); // t_0..t_{k-2}
            split_children.push_back(ext_reduce(std::move(main), ctx));
        }
    }
    CertPtr split = make_step(c1, {.rule = Rule::SplitComponents}, split_children, ctx);

    CertPtr second;
    if (k >= 3) {
        ExtState next = st;
        next.g = c2;
        next.tpath.resize(static_cast<std::size_t>(k - 2)); // t_0..t_{k-3}
        second = ext_reduce(std::move(next), ctx);
    } else {
        // k == 2: the closed neighborhood eats into the last cycle
        const auto& w = st.walks.back();
        int j = st.marked.back();
        if (st.walks.size() == 1) {
            second = auto_reduce_node(c2, ctx); // a bare path
        } else {
            ExtState next;
            next.g = c2;
            next.walks.assign(st.walks.begin(), st.walks.end() - 1);
            next.marked.assign(st.marked.begin(), st.marked.end() - 1);
            auto a = concat_tail(arc_down(w, j + 1), st.upath);
            auto b = arc_up(w, j - 1);
            assign_paths(next, std::move(a), std::move(b));
            second = ext_reduce(std::move(next), ctx);
        }
    }
    return make_step(st.g, {.rule = Rule::ClosedDominate, .e = e, .h = h}, {split, second}, ctx);
}

// k == 1, l <= 1: dominate the free marked edge from the pendant tip.
CertPtr ext_short_path(const ExtState& st, ReduceContext& ctx) {
    const auto& w = st.walks.back();
    int j = st.marked.back();
    const std::string e = eid(st.g, st.tpath[0], st.tpath[1]);
    const std::string h = eid(st.g, w[j], w[j + 1]);

    Multigraph c1 = st.g.delete_edges(one(h), true);
    Multigraph c2 = st.g.delete_closed_neighborhood(h);

    CertPtr first, second;
    if (st.walks.size() == 1) {
        first = auto_reduce_node(c1, ctx);  // path on s + l + 1 vertices
        second = auto_reduce_node(c2, ctx); // path on s - 2 vertices
    } else {
        ExtState n1;
        n1.g = c1;
        n1.walks.assign(st.walks.begin(), st.walks.end() - 1);
        n1.marked.assign(st.marked.begin(), st.marked.end() - 1);
        assign_paths(n1, concat_tail(arc_down(w, j + 1), st.upath),
                     concat_tail(arc_up(w, j), st.tpath));
        first = ext_reduce(std::move(n1), ctx);

        ExtState n2;
        n2.g = c2;
        n2.walks.assign(st.walks.begin(), st.walks.end() - 1);
        n2.marked.assign(st.marked.begin(), st.marked.end() - 1);
        assign_paths(n2, arc_down(w, j + 2), arc_up(w, j - 1));
        second = ext_reduce(std::move(n2), ctx);
    }
    return make_step(st.g, {.rule = Rule::ClosedDominate, .e = e, .h = h}, {first, second}, ctx);
}

// k == l == 0, last cycle a 4-cycle: its free edge is dominated by the glue.
CertPtr ext_last_square(const ExtState& st, ReduceContext& ctx) {
    const auto& w = st.walks.back();
    int j = st.marked.back(); // 2 on a 4-cycle
    const std::string e = eid(st.g, w[j], w[j + 1]);
    const std::string h = eid(st.g, w[0], w[1]);

    Multigraph child = st.g.delete_edges(one(h), true);

    ExtState next;
    next.g = child;
    next.walks.assign(st.walks.begin(), st.walks.end() - 2);
    next.marked.assign(st.marked.begin(), st.marked.end() - 2);
    const auto& prev = st.walks[st.walks.size() - 2];
    int pj = st.marked[st.marked.size() - 2];
    std::vector<std::string> merged(prev.begin(), prev.begin() + pj + 1);
    if (prev[pj] == w[0]) {
        merged.push_back(w[3]);
        merged.push_back(w[2]);
    } else {
        merged.push_back(w[2]);
        merged.push_back(w[3]);
    }
    merged.insert(merged.end(), prev.begin() + pj + 1, prev.end());
    next.walks.push_back(std::move(merged));
    next.marked.push_back(pj + 1);
    next.tpath = {next.walks.back()[pj + 1]};
    next.upath = {next.walks.back()[pj + 2]};
    return make_step(st.g, {.rule = Rule::OpenDominate, .e = e, .h = h},
                     {ext_reduce(std::move(next), ctx)}, ctx);
}

// Shared by the 5- and 6-cycle cases: the previous cycle loses its marked
// edge and both neighbors, leaving two arcs as pendant paths.
CertPtr ext_second_child(const ExtState& st, const Multigraph& c2, ReduceContext& ctx) {
    if (st.walks.size() == 2) return auto_reduce_node(c2, ctx); // a bare path
    ExtState next;
    next.g = c2;
    next.walks.assign(st.walks.begin(), st.walks.end() - 2);
    next.marked.assign(st.marked.begin(), st.marked.end() - 2);
    const auto& prev = st.walks[st.walks.size() - 2];
    int pj = st.marked[st.marked.size() - 2];
    assign_paths(next, arc_down(prev, pj + 2), arc_up(prev, pj - 1));
    return ext_reduce(std::move(next), ctx);
}

// k == l == 0, last cycle a 5-cycle: shrink it onto the glue edge, then
// split the parallel pair.
CertPtr ext_last_pentagon(const ExtState& st, ReduceContext& ctx) {
    const auto& w = st.walks.back();
    const std::string h = eid(st.g, w[0], w[1]);
    std::vector<std::string> x_path = {w[1], w[2], w[3], w[4], w[0]};

    Multigraph g1 = st.g.contract_path({w[1], w[2], w[3], w[4], w[0]});
    std::string x = g1.parallel_edges(h).at(0);
    Multigraph c1 = g1.delete_edges(one(x), true);
    Multigraph c2 = g1.delete_closed_neighborhood(h);

    ExtState chain;
    chain.g = c1;
    chain.walks.assign(st.walks.begin(), st.walks.end() - 1);
    chain.marked.assign(st.marked.begin(), st.marked.end() - 1);
    chain.tpath = {chain.walks.back()[chain.marked.back()]};
    chain.upath = {chain.walks.back()[chain.marked.back() + 1]};

    CertPtr first = ext_reduce(std::move(chain), ctx);
    CertPtr second = ext_second_child(st, c2, ctx);
    CertPtr parallel = make_step(g1, {.rule = Rule::ParallelEdge, .e = h, .x = x},
                                 {first, second}, ctx);
    return make_step(st.g, {.rule = Rule::ContractPath4, .path = x_path}, {parallel}, ctx);
}

// k == l == 0, last cycle a 6-cycle: shrink to a triangle on the glue edge,
// then collapse the triangle against the glue.
CertPtr ext_last_hexagon(const ExtState& st, ReduceContext& ctx) {
    const auto& w = st.walks.back();
    const std::string h = eid(st.g, w[0], w[1]);
    std::vector<std::string> x_path = {w[1], w[2], w[3], w[4], w[5]};

    Multigraph g1 = st.g.contract_path({w[1], w[2], w[3], w[4], w[5]});
    std::string fresh = eid(g1, w[1], w[5]);
    std::string other = eid(g1, w[5], w[0]);
    std::string e = std::min(fresh, other);

    Multigraph c1 = g1.delete_edges(one(h), true);
    Multigraph c2 = g1.delete_closed_neighborhood(h);

    ExtState next;
    next.g = c1;
    next.walks.assign(st.walks.begin(), st.walks.end() - 2);
    next.marked.assign(st.marked.begin(), st.marked.end() - 2);
    const auto& prev = st.walks[st.walks.size() - 2];
    int pj = st.marked[st.marked.size() - 2];
    std::vector<std::string> merged(prev.begin(), prev.begin() + pj + 1);
    merged.push_back(w[5]);
    merged.insert(merged.end(), prev.begin() + pj + 1, prev.end());
    next.walks.push_back(std::move(merged));
    next.marked.push_back(pj + 1);
    next.tpath = {next.walks.back()[pj + 1]};
    next.upath = {next.walks.back()[pj + 2]};

    CertPtr first = ext_reduce(std::move(next), ctx);
    CertPtr second = ext_second_child(st, c2, ctx);
    CertPtr dom = make_step(g1, {.rule = Rule::ClosedDominate, .e = e, .h = h},
                            {first, second}, ctx);
    return make_step(st.g, {.rule = Rule::ContractPath4, .path = x_path}, {dom}, ctx);
}

// k == l == 0, last cycle of length >= 7: shrink it by three.
CertPtr ext_last_long(const ExtState& st, ReduceContext& ctx) {
    const auto& w = st.walks.back();
    int s = static_cast<int>(w.size());
    int j = st.marked.back();
    std::vector<std::string> x_path = {w[1], w[2], w[3], w[4], w[5]};

    Multigraph g1 = st.g.contract_path({w[1], w[2], w[3], w[4], w[5]});

    ExtState next = st;
    next.g = g1;
    std::vector<std::string> shrunk = {w[0], w[1], w[5]};
    for (int m = 6; m < s; ++m) shrunk.push_back(w[m]);
    next.walks.back() = std::move(shrunk);
    next.marked.back() = j >= 5 ? j - 3 : tilings::default_offset(s - 3);
    next.tpath = {next.walks.back()[next.marked.back()]};
    next.upath = {next.walks.back()[next.marked.back() + 1]};

    return make_step(st.g, {.rule = Rule::ContractPath4, .path = x_path},
                     {ext_reduce(std::move(next), ctx)}, ctx);
}

CertPtr ext_reduce(ExtState st, ReduceContext& ctx) {
    check_state(st);
    int k = static_cast<int>(st.tpath.size()) - 1;
    int l = static_cast<int>(st.upath.size()) - 1;
    if (l > k) {
        flip_last_cycle(st);
        std::swap(k, l);
    }
    if (k >= 2) return ext_long_path(st, ctx);
    if (k == 1) return ext_short_path(st, ctx);
    if (st.walks.size() == 1) return auto_reduce_node(st.g, ctx); // bare cycle
    switch (st.walks.back().size()) {
        case 4: return ext_last_square(st, ctx);
        case 5: return ext_last_pentagon(st, ctx);
        case 6: return ext_last_hexagon(st, ctx);
        default: return ext_last_long(st, ctx);
    }
}

} // namespace

CertPtr scripted_extended_node(const TilingSpec& spec, ReduceContext& ctx) {
    tilings::ExtendedLayout layout =
        tilings::extended_layout(spec.s, spec.k, spec.l, spec.offsets);
    ExtState st{layout.graph, layout.walks, layout.marked, layout.t_path, layout.u_path};
    return ext_reduce(std::move(st), ctx);
}

tilings::TilingSpec infer_extended_spec(const Multigraph& g) {
    if (g.edge_count() > 32 || g.edge_count() < 4 || g.components().size() != 1)
        fail(ErrorCode::Precondition, "cannot infer extended-tiling parameters for this graph");
    int n = static_cast<int>(g.edge_count()) - static_cast<int>(g.vertex_count()) + 1;
    if (n < 1) fail(ErrorCode::Precondition, "graph has no cycles; not an extended tiling");

    // pendant path lengths: walk in from each leaf
    std::vector<int> lengths;
    for (const auto& v : g.vertices()) {
        if (g.degree(v) != 1) continue;
        int len = 0;
        std::string prev = v, cur = v;
        while (g.degree(cur) <= 2) {
            const auto inc = g.incident_edges(cur);
            std::string next;
            for (const auto& id : inc) {
                const EdgeRecord& e = g.edge(id);
                std::string other = e.u == cur ? e.v : e.u;
                if (other != prev || inc.size() == 1) next = other;
            }
            if (next.empty() || next == prev) break;
            prev = cur;
            cur = next;
            ++len;
            if (len > static_cast<int>(g.edge_count())) break;
        }
        lengths.push_back(len);
    }
    if (lengths.size() > 2)
        fail(ErrorCode::Precondition, "more than two pendant paths; not an extended tiling");
    while (lengths.size() < 2) lengths.push_back(0);
    std::sort(lengths.begin(), lengths.end());

    const std::string key = g.canonical_key();
    int total = static_cast<int>(g.edge_count());
    for (auto [k, l] : {std::pair{lengths[1], lengths[0]}, std::pair{lengths[0], lengths[1]}}) {
        int cycle_edges = total - k - l + (n - 1);
        std::vector<int> s(static_cast<std::size_t>(n), 4);
        // enumerate compositions of cycle_edges into n parts >= 4
        int extra = cycle_edges - 4 * n;
        if (extra < 0) continue;
        std::vector<int> add(static_cast<std::size_t>(n), 0);
        while (true) {
            int used = 0;
            for (int a : add) used += a;
            if (used == extra) {
                for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = 4 + add[static_cast<std::size_t>(i)];
                try {
                    if (tilings::extended(s, k, l).canonical_key() == key)
                        return tilings::TilingSpec{.family = tilings::Family::Extended,
                                                   .s = s,
                                                   .k = k,
                                                   .l = l};
                } catch (const Error&) {
                }
            }
            // next vector with entries summing to <= extra
            int i = n - 1;
            while (i >= 0) {
                if (used - add[static_cast<std::size_t>(i)] + add[static_cast<std::size_t>(i)] + 1 <= extra &&
                    add[static_cast<std::size_t>(i)] + 1 <= extra) {
                    ++add[static_cast<std::size_t>(i)];
                    break;
                }
                used -= add[static_cast<std::size_t>(i)];
                add[static_cast<std::size_t>(i)] = 0;
                --i;
            }
            if (i < 0) break;
        }
    }
    fail(ErrorCode::Precondition,
         "could not match the graph to default-offset extended parameters; "
         "pass the family spec explicitly");
}

} // namespace mcx::detail
