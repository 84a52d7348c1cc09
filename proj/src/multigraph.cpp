#include "mcx/multigraph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace mcx {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return "invalid_argument";
        case ErrorCode::Parse: return "parse";
        case ErrorCode::UnknownId: return "unknown_id";
        case ErrorCode::DuplicateId: return "duplicate_id";
        case ErrorCode::SelfLoop: return "self_loop";
        case ErrorCode::DanglingEndpoint: return "dangling_endpoint";
        case ErrorCode::Precondition: return "precondition";
        case ErrorCode::Budget: return "budget";
        case ErrorCode::NotSimple: return "not_simple";
        case ErrorCode::Malformed: return "malformed";
        case ErrorCode::Internal: return "internal";
    }
    return "unknown";
}

EdgeSet::EdgeSet(std::vector<std::string> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool EdgeSet::contains(const std::string& id) const {
    return std::binary_search(ids_.begin(), ids_.end(), id);
}

Multigraph Multigraph::build(std::vector<std::string> vertices, std::vector<EdgeRecord> edges) {
    Multigraph g;
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        fail(ErrorCode::InvalidArgument, "duplicate vertex label");
    g.vertices_ = std::move(vertices);

    for (auto& e : edges) {
        if (e.u == e.v)
            fail(ErrorCode::SelfLoop, "self-loop on vertex '" + e.u + "' (edge '" + e.id + "')");
        if (e.u > e.v) std::swap(e.u, e.v);
        if (!std::binary_search(g.vertices_.begin(), g.vertices_.end(), e.u) ||
            !std::binary_search(g.vertices_.begin(), g.vertices_.end(), e.v))
            fail(ErrorCode::DanglingEndpoint,
                 "edge '" + e.id + "' references an undeclared vertex");
    }
    std::sort(edges.begin(), edges.end(),
              [](const EdgeRecord& a, const EdgeRecord& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i].id == edges[i - 1].id)
            fail(ErrorCode::DuplicateId, "duplicate edge id '" + edges[i].id + "'");
    g.edges_ = std::move(edges);
    g.reindex();
    return g;
}

void Multigraph::reindex() {
    edge_index_.clear();
    incidence_.clear();
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        edge_index_.emplace(edges_[i].id, i);
        incidence_[edges_[i].u].push_back(i);
        incidence_[edges_[i].v].push_back(i);
    }
}

bool Multigraph::has_vertex(const std::string& label) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), label);
}

bool Multigraph::has_edge(const std::string& id) const {
    return edge_index_.count(id) > 0;
}

std::size_t Multigraph::edge_pos(const std::string& id) const {
    auto it = edge_index_.find(id);
    if (it == edge_index_.end()) fail(ErrorCode::UnknownId, "unknown edge id '" + id + "'");
    return it->second;
}

const EdgeRecord& Multigraph::edge(const std::string& id) const {
    return edges_[edge_pos(id)];
}

int Multigraph::degree(const std::string& vertex) const {
    auto it = incidence_.find(vertex);
    return it == incidence_.end() ? 0 : static_cast<int>(it->second.size());
}

std::vector<std::string> Multigraph::incident_edges(const std::string& vertex) const {
    std::vector<std::string> ids;
    auto it = incidence_.find(vertex);
    if (it != incidence_.end())
        for (std::size_t i : it->second) ids.push_back(edges_[i].id);
    std::sort(ids.begin(), ids.end());
    return ids;
}

bool Multigraph::edges_adjacent(const std::string& a, const std::string& b) const {
    const EdgeRecord& ea = edge(a);
    const EdgeRecord& eb = edge(b);
    return ea.touches(eb.u) || ea.touches(eb.v);
}

std::optional<std::string> Multigraph::edge_between(const std::string& u,
                                                    const std::string& v) const {
    std::optional<std::string> best;
    auto it = incidence_.find(u);
    if (it == incidence_.end()) return best;
    for (std::size_t i : it->second) {
        const EdgeRecord& e = edges_[i];
        if (e.touches(v) && (!best || e.id < *best)) best = e.id;
    }
    return best;
}

std::vector<std::string> Multigraph::parallel_edges(const std::string& id) const {
    const EdgeRecord& e = edge(id);
    std::vector<std::string> out;
    for (std::size_t i : incidence_.at(e.u)) {
        const EdgeRecord& other = edges_[i];
        if (other.id != id && other.same_endpoints(e)) out.push_back(other.id);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool Multigraph::is_simple() const {
    for (const auto& e : edges_)
        if (!parallel_edges(e.id).empty()) return false;
    return true;
}

EdgeSet Multigraph::edge_neighborhood(const std::string& e, bool closed) const {
    const EdgeRecord& rec = edge(e);
    std::vector<std::string> ids;
    for (const std::string& v : {rec.u, rec.v}) {
        auto it = incidence_.find(v);
        if (it == incidence_.end()) continue;
        for (std::size_t i : it->second)
            if (edges_[i].id != e) ids.push_back(edges_[i].id);
    }
    // A parallel edge shares both endpoints; also covers EN(e) for edges
    // incident only via the second endpoint.
    if (closed) ids.push_back(e);
    return EdgeSet(std::move(ids));
}

Multigraph Multigraph::delete_edges(const EdgeSet& s, bool drop_isolated) const {
    for (const std::string& id : s.ids())
        if (!has_edge(id)) fail(ErrorCode::UnknownId, "cannot delete unknown edge '" + id + "'");

    std::vector<EdgeRecord> kept;
    for (const auto& e : edges_)
        if (!s.contains(e.id)) kept.push_back(e);

    std::vector<std::string> verts;
    if (drop_isolated) {
        std::set<std::string> used;
        for (const auto& e : kept) {
            used.insert(e.u);
            used.insert(e.v);
        }
        verts.assign(used.begin(), used.end());
    } else {
        verts = vertices_;
    }
    return build(std::move(verts), std::move(kept));
}

Multigraph Multigraph::delete_closed_neighborhood(const std::string& e) const {
    return delete_edges(edge_neighborhood(e, /*closed=*/true), /*drop_isolated=*/true);
}

Multigraph Multigraph::contract_path(const std::array<std::string, 5>& p) const {
    for (const auto& v : p)
        if (!has_vertex(v)) fail(ErrorCode::Precondition, "path vertex '" + v + "' not in graph");
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j)
            if (p[i] == p[j]) fail(ErrorCode::Precondition, "path vertices must be distinct");

    std::vector<std::string> path_edges;
    for (std::size_t i = 0; i + 1 < 5; ++i) {
        auto id = edge_between(p[i], p[i + 1]);
        if (!id) fail(ErrorCode::Precondition,
                      "consecutive path vertices '" + p[i] + "','" + p[i + 1] + "' not adjacent");
        path_edges.push_back(*id);
    }
    for (std::size_t i = 1; i <= 3; ++i)
        if (degree(p[i]) != 2)
            fail(ErrorCode::Precondition, "internal path vertex '" + p[i] + "' has degree != 2");

    std::vector<EdgeRecord> kept;
    EdgeSet removed(path_edges);
    for (const auto& e : edges_)
        if (!removed.contains(e.id)) kept.push_back(e);

    // Fresh edge id: first x<n> not already taken.
    std::string fresh;
    for (int n = 0;; ++n) {
        fresh = "x" + std::to_string(n);
        if (!has_edge(fresh)) break;
    }
    kept.push_back(EdgeRecord{fresh, p[0], p[4]});

    std::vector<std::string> verts;
    for (const auto& v : vertices_)
        if (v != p[1] && v != p[2] && v != p[3]) verts.push_back(v);
    return build(std::move(verts), std::move(kept));
}

Multigraph Multigraph::line_graph() const {
    std::vector<std::string> verts;
    for (const auto& e : edges_) verts.push_back(e.id);
    std::vector<EdgeRecord> line_edges;
    for (std::size_t i = 0; i < edges_.size(); ++i)
        for (std::size_t j = i + 1; j < edges_.size(); ++j)
            if (edges_[i].touches(edges_[j].u) || edges_[i].touches(edges_[j].v)) {
                std::string a = edges_[i].id, b = edges_[j].id;
                if (a > b) std::swap(a, b);
                line_edges.push_back(EdgeRecord{a + "~" + b, a, b});
            }
    return build(std::move(verts), std::move(line_edges));
}

bool Multigraph::is_simplicial_edge(const std::string& e) const {
    EdgeSet nbrs = edge_neighborhood(e, /*closed=*/false);
    const auto& ids = nbrs.ids();
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
            if (!edges_adjacent(ids[i], ids[j])) return false;
    return true;
}

std::vector<Multigraph> Multigraph::components() const {
    // Union-find over vertices that touch at least one edge.
    std::map<std::string, std::string> parent;
    std::function<std::string(const std::string&)> find =
        [&](const std::string& v) -> std::string {
        auto it = parent.find(v);
        if (it->second == v) return v;
        std::string root = find(it->second);
        parent[v] = root;
        return root;
    };
    for (const auto& e : edges_) {
        parent.emplace(e.u, e.u);
        parent.emplace(e.v, e.v);
    }
    for (const auto& e : edges_) {
        std::string ru = find(e.u), rv = find(e.v);
        if (ru != rv) parent[std::max(ru, rv)] = std::min(ru, rv);
    }

    std::map<std::string, std::pair<std::set<std::string>, std::vector<EdgeRecord>>> comps;
    for (const auto& e : edges_) {
        auto& comp = comps[find(e.u)];
        comp.first.insert(e.u);
        comp.first.insert(e.v);
        comp.second.push_back(e);
    }

    std::vector<Multigraph> out;
    for (auto& [root, comp] : comps) {
        std::vector<std::string> verts(comp.first.begin(), comp.first.end());
        out.push_back(build(std::move(verts), std::move(comp.second)));
    }
    return out; // keyed by smallest vertex label, so already deterministic
}

bool Multigraph::edge_pairs_equal(const Multigraph& other) const {
    if (edges_.size() != other.edges_.size()) return false;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const EdgeRecord& a = edges_[i];
        const EdgeRecord& b = other.edges_[i];
        if (a.id != b.id || a.u != b.u || a.v != b.v) return false;
    }
    return true;
}

bool brute_force_isomorphic(const Multigraph& a, const Multigraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    const auto& va = a.vertices();
    const auto& vb = b.vertices();
    std::size_t n = va.size();
    if (n > 10) fail(ErrorCode::Budget, "brute-force isomorphism limited to 10 vertices");

    auto mult = [](const Multigraph& g, const std::string& u, const std::string& v) {
        int m = 0;
        for (const auto& e : g.edges())
            if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) ++m;
        return m;
    };

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            if (a.degree(va[i]) != b.degree(vb[perm[i]])) ok = false;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = i + 1; j < n && ok; ++j)
                if (mult(a, va[i], va[j]) != mult(b, vb[perm[i]], vb[perm[j]])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace mcx
