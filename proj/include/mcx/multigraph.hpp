#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mcx/errors.hpp"

namespace mcx {

/// One edge of a multigraph. Endpoints are an unordered pair, stored with
/// u < v. Parallel edges (same endpoints, distinct ids) are permitted;
/// self-loops are not.
struct EdgeRecord {
    std::string id;
    std::string u;
    std::string v;

    bool touches(const std::string& vertex) const { return u == vertex || v == vertex; }
    bool same_endpoints(const EdgeRecord& other) const { return u == other.u && v == other.v; }
};

/// A set of edge ids, kept sorted and duplicate-free.
class EdgeSet {
public:
    EdgeSet() = default;
    explicit EdgeSet(std::vector<std::string> ids);

    const std::vector<std::string>& ids() const { return ids_; }
    bool contains(const std::string& id) const;
    std::size_t size() const { return ids_.size(); }
    bool empty() const { return ids_.empty(); }

private:
    std::vector<std::string> ids_;
};

/// Finite multigraph with opaque vertex labels and uniquely named edges.
/// Values are immutable after construction; every operation returns a new
/// graph, so instances can be shared freely across threads.
class Multigraph {
public:
    Multigraph() = default; // the empty graph

    /// Validates and builds. Vertices and edges are held in sorted order so
    /// iteration and serialization are deterministic.
    static Multigraph build(std::vector<std::string> vertices, std::vector<EdgeRecord> edges);

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    bool edgeless() const { return edges_.empty(); }

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<EdgeRecord>& edges() const { return edges_; }

    bool has_vertex(const std::string& label) const;
    bool has_edge(const std::string& id) const;
    const EdgeRecord& edge(const std::string& id) const;

    /// Number of incident edge records (parallel edges count separately).
    int degree(const std::string& vertex) const;

    /// Sorted ids of edges incident to the vertex.
    std::vector<std::string> incident_edges(const std::string& vertex) const;

    /// True iff the two edges share at least one endpoint.
    bool edges_adjacent(const std::string& a, const std::string& b) const;

    /// Smallest edge id joining u and v, if any.
    std::optional<std::string> edge_between(const std::string& u, const std::string& v) const;

    /// Other edges with the same endpoint pair as the given edge.
    std::vector<std::string> parallel_edges(const std::string& id) const;

    bool is_simple() const;

    /// EN(e) / EN[e]: edges sharing an endpoint with e, without / with e.
    EdgeSet edge_neighborhood(const std::string& e, bool closed) const;

    /// Removes the given edges. With drop_isolated, vertices left with no
    /// incident edge disappear as well (matching complexes never see them).
    Multigraph delete_edges(const EdgeSet& s, bool drop_isolated) const;

    /// delete_edges(g, EN[e], drop_isolated = true).
    Multigraph delete_closed_neighborhood(const std::string& e) const;

    /// Contracts a 4-edge path (5 distinct vertices, internal vertices of
    /// degree exactly 2) to a single fresh edge joining its endpoints.
    /// The fresh edge id is minted deterministically and may be parallel
    /// to an existing edge.
    Multigraph contract_path(const std::array<std::string, 5>& path_vertices) const;

    /// Line graph: one vertex per edge id, adjacency = shared endpoint.
    /// Output is always simple.
    Multigraph line_graph() const;

    /// True iff every pair of edges adjacent to e is itself adjacent.
    bool is_simplicial_edge(const std::string& e) const;

    /// Connected components with at least one edge, isolated vertices
    /// dropped, ordered by smallest vertex label.
    std::vector<Multigraph> components() const;

    /// Isomorphism-invariant key: equal keys iff the multigraphs are
    /// isomorphic respecting edge multiplicities. Computed by exact
    /// canonical labeling (individualization-refinement).
    std::string canonical_key() const;

    bool operator==(const Multigraph& other) const {
        return vertices_ == other.vertices_ && edge_pairs_equal(other);
    }

private:
    std::vector<std::string> vertices_;                       // sorted, unique
    std::vector<EdgeRecord> edges_;                           // sorted by id
    std::map<std::string, std::size_t> edge_index_;           // id -> index
    std::map<std::string, std::vector<std::size_t>> incidence_; // vertex -> edge indices

    void reindex();
    std::size_t edge_pos(const std::string& id) const;
    bool edge_pairs_equal(const Multigraph& other) const;
};

/// Test-friendly exhaustive isomorphism check (small graphs only): tries
/// every degree-respecting vertex bijection. Independent of canonical_key.
bool brute_force_isomorphic(const Multigraph& a, const Multigraph& b);

} // namespace mcx
