#include "mcx/reduction.hpp"

#include <algorithm>
#include <set>

#include "reduce_internal.hpp"

namespace mcx {

const char* rule_name(Rule r) {
    switch (r) {
        case Rule::BaseEdgeless: return "BaseEdgeless";
        case Rule::BaseSingleEdges: return "BaseSingleEdges";
        case Rule::SplitComponents: return "SplitComponents";
        case Rule::OpenDominate: return "OpenDominate";
        case Rule::PendantPath3: return "PendantPath3";
        case Rule::ClosedDominate: return "ClosedDominate";
        case Rule::SimplicialEdge: return "SimplicialEdge";
        case Rule::ContractPath4: return "ContractPath4";
        case Rule::ParallelEdge: return "ParallelEdge";
    }
    return "unknown";
}

std::optional<Rule> rule_from_name(const std::string& name) {
    for (Rule r : {Rule::BaseEdgeless, Rule::BaseSingleEdges, Rule::SplitComponents,
                   Rule::OpenDominate, Rule::PendantPath3, Rule::ClosedDominate,
                   Rule::SimplicialEdge, Rule::ContractPath4, Rule::ParallelEdge})
        if (name == rule_name(r)) return r;
    return std::nullopt;
}

const char* combinator_name(Combinator c) {
    switch (c) {
        case Combinator::Leaf: return "leaf";
        case Combinator::Identity: return "identity";
        case Combinator::Wedge: return "wedge";
        case Combinator::SuspendThenWedge: return "suspend_then_wedge";
        case Combinator::SuspendEach: return "suspend_each";
        case Combinator::Join: return "join";
    }
    return "unknown";
}

std::optional<Combinator> combinator_from_name(const std::string& name) {
    for (Combinator c : {Combinator::Leaf, Combinator::Identity, Combinator::Wedge,
                         Combinator::SuspendThenWedge, Combinator::SuspendEach, Combinator::Join})
        if (name == combinator_name(c)) return c;
    return std::nullopt;
}

const char* strategy_name(Strategy s) {
    switch (s) {
        case Strategy::Auto: return "auto";
        case Strategy::ScriptedTriangle: return "scripted_triangle";
        case Strategy::ScriptedPentagon: return "scripted_pentagon";
        case Strategy::ScriptedExtended: return "scripted_extended";
    }
    return "unknown";
}

std::optional<Strategy> strategy_from_name(const std::string& name) {
    for (Strategy s : {Strategy::Auto, Strategy::ScriptedTriangle, Strategy::ScriptedPentagon,
                       Strategy::ScriptedExtended})
        if (name == strategy_name(s)) return s;
    return std::nullopt;
}

namespace {

bool all_components_single_edges(const Multigraph& g) {
    if (g.edgeless()) return false;
    for (const auto& e : g.edges())
        if (g.degree(e.u) != 1 || g.degree(e.v) != 1) return false;
    return true;
}

bool subset(const EdgeSet& a, const EdgeSet& b) {
    for (const auto& id : a.ids())
        if (!b.contains(id)) return false;
    return true;
}

// pendant path of length 3 ending at the degree-1 vertex `leaf`; returns
// [attachment, v1, v2, leaf] or nothing
std::optional<std::vector<std::string>> pendant_path_from_leaf(const Multigraph& g,
                                                               const std::string& leaf) {
    if (g.degree(leaf) != 1) return std::nullopt;
    std::string v3 = leaf;
    std::string e3 = g.incident_edges(v3).front();
    const EdgeRecord& r3 = g.edge(e3);
    std::string v2 = (r3.u == v3) ? r3.v : r3.u;
    if (g.degree(v2) != 2) return std::nullopt;
    std::string e2;
    for (const auto& id : g.incident_edges(v2))
        if (id != e3) e2 = id;
    const EdgeRecord& r2 = g.edge(e2);
    std::string v1 = (r2.u == v2) ? r2.v : r2.u;
    if (v1 == v3 || g.degree(v1) != 2) return std::nullopt;
    std::string e1;
    for (const auto& id : g.incident_edges(v1))
        if (id != e2) e1 = id;
    const EdgeRecord& r1 = g.edge(e1);
    std::string v0 = (r1.u == v1) ? r1.v : r1.u;
    if (v0 == v1 || v0 == v2 || v0 == v3) return std::nullopt;
    return std::vector<std::string>{v0, v1, v2, v3};
}

std::vector<std::string> path_edge_ids(const Multigraph& g,
                                       const std::vector<std::string>& path) {
    std::vector<std::string> ids;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        auto id = g.edge_between(path[i], path[i + 1]);
        if (!id) fail(ErrorCode::Precondition, "path vertices not adjacent");
        ids.push_back(*id);
    }
    return ids;
}

} // namespace

bool rule_applicable(const Multigraph& g, const RuleInstance& r) {
    try {
        switch (r.rule) {
            case Rule::BaseEdgeless:
                return g.edgeless();
            case Rule::BaseSingleEdges:
                return all_components_single_edges(g);
            case Rule::SplitComponents:
                return g.components().size() >= 2;
            case Rule::OpenDominate:
                return r.e != r.h && g.has_edge(r.e) && g.has_edge(r.h) &&
                       subset(g.edge_neighborhood(r.e, false), g.edge_neighborhood(r.h, false));
            case Rule::ClosedDominate:
                return r.e != r.h && g.has_edge(r.e) && g.has_edge(r.h) &&
                       subset(g.edge_neighborhood(r.e, true), g.edge_neighborhood(r.h, true));
            case Rule::SimplicialEdge:
                return g.has_edge(r.e) && g.is_simplicial_edge(r.e);
            case Rule::PendantPath3: {
                if (r.path.size() != 4) return false;
                auto found = pendant_path_from_leaf(g, r.path[3]);
                return found && *found == r.path;
            }
            case Rule::ContractPath4: {
                if (r.path.size() != 5) return false;
                std::set<std::string> distinct(r.path.begin(), r.path.end());
                if (distinct.size() != 5) return false;
                for (std::size_t i = 0; i + 1 < 5; ++i)
                    if (!g.edge_between(r.path[i], r.path[i + 1])) return false;
                for (std::size_t i = 1; i <= 3; ++i)
                    if (g.degree(r.path[i]) != 2) return false;
                return true;
            }
            case Rule::ParallelEdge: {
                if (r.e == r.x || !g.has_edge(r.e) || !g.has_edge(r.x)) return false;
                return g.edge(r.e).same_endpoints(g.edge(r.x));
            }
        }
    } catch (const Error&) {
        return false;
    }
    return false;
}

std::vector<RuleInstance> applicable_rules(const Multigraph& g) {
    std::vector<RuleInstance> out;
    auto push = [&out](RuleInstance r) { out.push_back(std::move(r)); };

    if (g.edgeless()) push({.rule = Rule::BaseEdgeless});
    if (all_components_single_edges(g)) push({.rule = Rule::BaseSingleEdges});
    if (g.components().size() >= 2) push({.rule = Rule::SplitComponents});

    const auto& edges = g.edges();

    // domination pairs, ordered by (h, e)
    for (Rule rule : {Rule::OpenDominate, Rule::ClosedDominate}) {
        std::vector<RuleInstance> found;
        bool closed = rule == Rule::ClosedDominate;
        for (const auto& h : edges)
            for (const auto& e : edges) {
                if (e.id == h.id) continue;
                if (subset(g.edge_neighborhood(e.id, closed),
                           g.edge_neighborhood(h.id, closed)))
                    found.push_back({.rule = rule, .e = e.id, .h = h.id});
            }
        std::sort(found.begin(), found.end(), [](const RuleInstance& a, const RuleInstance& b) {
            return std::tie(a.h, a.e) < std::tie(b.h, b.e);
        });
        if (rule == Rule::OpenDominate) {
            for (auto& r : found) push(std::move(r));
            // pendant paths slot between the domination rules
            std::vector<RuleInstance> paths;
            for (const auto& v : g.vertices()) {
                auto p = pendant_path_from_leaf(g, v);
                if (p) paths.push_back({.rule = Rule::PendantPath3, .path = *p});
            }
            std::sort(paths.begin(), paths.end(),
                      [](const RuleInstance& a, const RuleInstance& b) { return a.path < b.path; });
            for (auto& r : paths) push(std::move(r));
        } else {
            for (auto& r : found) push(std::move(r));
        }
    }

    {
        std::vector<RuleInstance> simplicial;
        for (const auto& e : edges)
            if (g.is_simplicial_edge(e.id))
                simplicial.push_back({.rule = Rule::SimplicialEdge, .e = e.id});
        for (auto& r : simplicial) push(std::move(r));
    }

    {
        // 4-paths keyed by their middle vertex, one orientation each
        std::vector<RuleInstance> contractions;
        for (const auto& mid : g.vertices()) {
            if (g.degree(mid) != 2) continue;
            auto inc = g.incident_edges(mid);
            const EdgeRecord& ea = g.edge(inc[0]);
            const EdgeRecord& eb = g.edge(inc[1]);
            std::string v1 = ea.u == mid ? ea.v : ea.u;
            std::string v3 = eb.u == mid ? eb.v : eb.u;
            if (v1 == v3) continue; // parallel pair around mid
            if (g.degree(v1) != 2 || g.degree(v3) != 2) continue;
            auto outer = [&](const std::string& inner, const std::string& via) {
                for (const auto& id : g.incident_edges(inner)) {
                    const EdgeRecord& e = g.edge(id);
                    std::string other = e.u == inner ? e.v : e.u;
                    if (other != via) return other;
                }
                return std::string{};
            };
            std::string v0 = outer(v1, mid);
            std::string v4 = outer(v3, mid);
            if (v0.empty() || v4.empty()) continue;
            std::vector<std::string> p = {v0, v1, mid, v3, v4};
            std::set<std::string> distinct(p.begin(), p.end());
            if (distinct.size() != 5) continue;
            std::vector<std::string> rev(p.rbegin(), p.rend());
            if (rev < p) p = rev;
            contractions.push_back({.rule = Rule::ContractPath4, .path = p});
        }
        std::sort(contractions.begin(), contractions.end(),
                  [](const RuleInstance& a, const RuleInstance& b) { return a.path < b.path; });
        contractions.erase(std::unique(contractions.begin(), contractions.end()),
                           contractions.end());
        for (auto& r : contractions) push(std::move(r));
    }

    {
        std::vector<RuleInstance> parallel;
        for (const auto& e : edges)
            for (const auto& x : g.parallel_edges(e.id))
                if (e.id < x) parallel.push_back({.rule = Rule::ParallelEdge, .e = e.id, .x = x});
        std::sort(parallel.begin(), parallel.end(),
                  [](const RuleInstance& a, const RuleInstance& b) {
                      return std::tie(a.e, a.x) < std::tie(b.e, b.x);
                  });
        for (auto& r : parallel) push(std::move(r));
    }

    std::stable_sort(out.begin(), out.end(), [](const RuleInstance& a, const RuleInstance& b) {
        return static_cast<int>(a.rule) < static_cast<int>(b.rule);
    });
    return out;
}

RuleApplication apply_rule(const Multigraph& g, const RuleInstance& r) {
    if (!rule_applicable(g, r))
        fail(ErrorCode::Precondition,
             std::string("stale witness for rule ") + rule_name(r.rule));

    RuleApplication app;
    switch (r.rule) {
        case Rule::BaseEdgeless:
        case Rule::BaseSingleEdges:
            app.combinator = Combinator::Leaf;
            break;
        case Rule::SplitComponents: {
            app.combinator = Combinator::Join;
            for (auto& comp : g.components()) {
                app.children.push_back(std::move(comp));
                app.shifts.push_back(0);
            }
            break;
        }
        case Rule::OpenDominate:
            app.combinator = Combinator::Identity;
            app.children.push_back(g.delete_edges(EdgeSet({r.h}), true));
            app.shifts = {0};
            break;
        case Rule::ClosedDominate:
            app.combinator = Combinator::Wedge;
            app.children.push_back(g.delete_edges(EdgeSet({r.h}), true));
            app.children.push_back(g.delete_closed_neighborhood(r.h));
            app.shifts = {0, 1};
            break;
        case Rule::SimplicialEdge: {
            app.combinator = Combinator::SuspendEach;
            const EdgeSet nbrs = g.edge_neighborhood(r.e, false);
            for (const auto& w : nbrs.ids()) {
                app.children.push_back(g.delete_closed_neighborhood(w));
                app.shifts.push_back(1);
            }
            break;
        }
        case Rule::PendantPath3:
            app.combinator = Combinator::SuspendThenWedge;
            app.children.push_back(g.delete_edges(EdgeSet(path_edge_ids(g, r.path)), true));
            app.shifts = {1};
            break;
        case Rule::ContractPath4: {
            app.combinator = Combinator::SuspendThenWedge;
            std::array<std::string, 5> p;
            std::copy(r.path.begin(), r.path.end(), p.begin());
            app.children.push_back(g.contract_path(p));
            app.shifts = {1};
            break;
        }
        case Rule::ParallelEdge:
            app.combinator = Combinator::Wedge;
            app.children.push_back(g.delete_edges(EdgeSet({r.x}), true));
            app.children.push_back(g.delete_closed_neighborhood(r.e));
            app.shifts = {0, 1};
            break;
    }
    return app;
}

namespace detail {

HomotopyClass combine_children(Combinator comb, const std::vector<int>& shifts,
                               const std::vector<CertPtr>& children) {
    if (comb == Combinator::Join) {
        HomotopyClass acc = HomotopyClass::empty_complex(); // join identity
        for (const auto& child : children) acc = join(acc, child->cls);
        return acc;
    }
    HomotopyClass acc = HomotopyClass::contractible(); // wedge identity
    for (std::size_t i = 0; i < children.size(); ++i)
        acc = wedge(acc, suspension(children[i]->cls, shifts[i]));
    return acc;
}

CertPtr make_leaf(const Multigraph& g, Rule rule, ReduceContext& ctx) {
    ctx.charge(g);
    auto node = std::make_shared<TraceNode>();
    node->graph = g;
    node->graph_key = g.canonical_key();
    node->rule = RuleInstance{.rule = rule};
    node->combinator = Combinator::Leaf;
    node->leaf = rule == Rule::BaseEdgeless ? HomotopyClass::empty_complex()
                                            : HomotopyClass::contractible();
    node->cls = *node->leaf;
    return node;
}

CertPtr make_step(const Multigraph& g, const RuleInstance& r,
                  const std::vector<CertPtr>& children, ReduceContext& ctx) {
    ctx.charge(g);
    RuleApplication app = apply_rule(g, r);
    if (app.children.size() != children.size())
        fail(ErrorCode::Internal, "scripted step produced the wrong child count");
    for (std::size_t i = 0; i < children.size(); ++i)
        if (app.children[i].canonical_key() != children[i]->graph_key)
            fail(ErrorCode::Internal, "scripted child does not match the applied rule");

    auto node = std::make_shared<TraceNode>();
    node->graph = g;
    node->graph_key = g.canonical_key();
    node->rule = r;
    node->combinator = app.combinator;
    node->shifts = app.shifts;
    node->children = children;
    node->cls = combine_children(node->combinator, node->shifts, node->children);
    return node;
}

CertPtr auto_reduce_node(const Multigraph& g, ReduceContext& ctx) {
    bool memoable = g.edge_count() <= kMemoEdgeLimit;
    std::string key = g.canonical_key();
    if (memoable) {
        auto it = ctx.memo.find(key);
        if (it != ctx.memo.end()) return it->second;
    }
    ctx.charge(g);

    auto rules = applicable_rules(g);
    if (rules.empty()) throw StuckGraph{g};
    const RuleInstance& r = rules.front();

    auto node = std::make_shared<TraceNode>();
    node->graph = g;
    node->graph_key = key;
    node->rule = r;
    if (r.rule == Rule::BaseEdgeless || r.rule == Rule::BaseSingleEdges) {
        node->combinator = Combinator::Leaf;
        node->leaf = r.rule == Rule::BaseEdgeless ? HomotopyClass::empty_complex()
                                                  : HomotopyClass::contractible();
        node->cls = *node->leaf;
    } else {
        RuleApplication app = apply_rule(g, r);
        node->combinator = app.combinator;
        node->shifts = app.shifts;
        for (const auto& child : app.children)
            node->children.push_back(auto_reduce_node(child, ctx));
        node->cls = combine_children(node->combinator, node->shifts, node->children);
    }
    CertPtr ptr = node;
    if (memoable) ctx.memo.emplace(key, ptr);
    return ptr;
}

} // namespace detail

namespace {

ReduceOutcome run_with_context(std::size_t budget,
                               const std::function<CertPtr(detail::ReduceContext&)>& body) {
    detail::ReduceContext ctx;
    ctx.budget = budget == 0 ? kDefaultReduceBudget : budget;
    try {
        CertPtr root = body(ctx);
        return Reduced{root->cls, root, ctx.used};
    } catch (const detail::BudgetExhausted& b) {
        return Partial{b.at, true, ctx.used};
    } catch (const detail::StuckGraph& s) {
        return Partial{s.at, false, ctx.used};
    }
}

int require_family_t(const Multigraph& g, std::optional<int> t_from_count,
                     Multigraph (*gen)(int), const char* what) {
    if (t_from_count) {
        Multigraph expect = gen(*t_from_count);
        if (expect.canonical_key() == g.canonical_key()) return *t_from_count;
    }
    fail(ErrorCode::Precondition,
         std::string("input graph is not a ") + what + " tiling; use the auto strategy");
}

} // namespace

ReduceOutcome reduce(const Multigraph& g, Strategy strategy, std::size_t budget) {
    switch (strategy) {
        case Strategy::Auto:
            return run_with_context(budget, [&](detail::ReduceContext& ctx) {
                return detail::auto_reduce_node(g, ctx);
            });
        case Strategy::ScriptedTriangle: {
            int t = require_family_t(g, tilings::triangular_t_from_edge_count(g.edge_count()),
                                     tilings::triangular, "triangular");
            return run_with_context(budget, [&](detail::ReduceContext& ctx) {
                return detail::scripted_triangle_node(t, ctx);
            });
        }
        case Strategy::ScriptedPentagon: {
            int t = require_family_t(g, tilings::pentagonal_t_from_edge_count(g.edge_count()),
                                     tilings::pentagonal, "pentagonal");
            return run_with_context(budget, [&](detail::ReduceContext& ctx) {
                return detail::scripted_pentagon_node(t, ctx);
            });
        }
        case Strategy::ScriptedExtended: {
            tilings::TilingSpec spec = detail::infer_extended_spec(g);
            return run_with_context(budget, [&](detail::ReduceContext& ctx) {
                return detail::scripted_extended_node(spec, ctx);
            });
        }
    }
    fail(ErrorCode::InvalidArgument, "unknown strategy");
}

ReduceOutcome reduce_spec(const tilings::TilingSpec& spec, Strategy strategy,
                          std::size_t budget) {
    using tilings::Family;
    switch (strategy) {
        case Strategy::Auto:
            return reduce(tilings::generate(spec), Strategy::Auto, budget);
        case Strategy::ScriptedTriangle:
            if (spec.family != Family::Triangular)
                fail(ErrorCode::Precondition, "scripted_triangle needs a triangular spec");
            return run_with_context(budget, [&](detail::ReduceContext& ctx) {
                return detail::scripted_triangle_node(spec.t, ctx);
            });
        case Strategy::ScriptedPentagon:
            if (spec.family == Family::Pentagonal)
                return run_with_context(budget, [&](detail::ReduceContext& ctx) {
                    return detail::scripted_pentagon_node(spec.t, ctx);
                });
            if (spec.family == Family::PentagonalPendant)
                return run_with_context(budget, [&](detail::ReduceContext& ctx) {
                    return detail::scripted_pendant_node(spec.t, ctx);
                });
            fail(ErrorCode::Precondition, "scripted_pentagon needs a pentagonal spec");
        case Strategy::ScriptedExtended:
            if (spec.family != Family::Extended)
                fail(ErrorCode::Precondition, "scripted_extended needs an extended spec");
            return run_with_context(budget, [&](detail::ReduceContext& ctx) {
                return detail::scripted_extended_node(spec, ctx);
            });
    }
    fail(ErrorCode::InvalidArgument, "unknown strategy");
}

HomotopyClass replay_trace(const TraceNode& node) {
    if (node.combinator == Combinator::Leaf) {
        if (!node.leaf) fail(ErrorCode::Malformed, "leaf node without a homotopy class");
        return *node.leaf;
    }
    if (node.combinator == Combinator::Join) {
        HomotopyClass acc = HomotopyClass::empty_complex();
        for (const auto& child : node.children) acc = join(acc, replay_trace(*child));
        return acc;
    }
    HomotopyClass acc = HomotopyClass::contractible();
    for (std::size_t i = 0; i < node.children.size(); ++i) {
        int shift = i < node.shifts.size() ? node.shifts[i] : 0;
        acc = wedge(acc, suspension(replay_trace(*node.children[i]), shift));
    }
    return acc;
}

namespace {

bool verify_node(const TraceNode& node) {
    if (node.graph_key != node.graph.canonical_key()) return false;

    if (node.combinator == Combinator::Leaf) {
        if (!node.leaf || !node.children.empty()) return false;
        if (node.rule.rule == Rule::BaseEdgeless)
            return rule_applicable(node.graph, node.rule) &&
                   *node.leaf == HomotopyClass::empty_complex() && node.cls == *node.leaf;
        if (node.rule.rule == Rule::BaseSingleEdges)
            return rule_applicable(node.graph, node.rule) &&
                   *node.leaf == HomotopyClass::contractible() && node.cls == *node.leaf;
        return false;
    }

    if (!rule_applicable(node.graph, node.rule)) return false;
    RuleApplication app;
    try {
        app = apply_rule(node.graph, node.rule);
    } catch (const Error&) {
        return false;
    }
    if (app.combinator != node.combinator || app.shifts != node.shifts) return false;
    if (app.children.size() != node.children.size()) return false;
    for (std::size_t i = 0; i < app.children.size(); ++i) {
        // children are recorded up to isomorphism
        if (app.children[i].canonical_key() != node.children[i]->graph_key) return false;
        if (!verify_node(*node.children[i])) return false;
    }

    HomotopyClass acc = detail::combine_children(node.combinator, node.shifts, node.children);
    return acc == node.cls;
}

} // namespace

bool verify_certificate(const TraceNode& root) {
    try {
        if (!verify_node(root)) return false;
        return replay_trace(root) == root.cls;
    } catch (const Error&) {
        return false;
    }
}

} // namespace mcx
