#pragma once

// Shared test helpers: seeded random multigraphs, disjoint unions with label
// prefixes, and a brute-force matching enumerator kept independent of the
// SimplicialComplex construction path.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "mcx/complex.hpp"
#include "mcx/homology.hpp"
#include "mcx/multigraph.hpp"

namespace mcx::testutil {

inline Multigraph random_multigraph(std::mt19937& rng, int max_vertices = 8,
                                    int max_edges = 12, double parallel_prob = 0.15) {
    std::uniform_int_distribution<int> nv_dist(2, max_vertices);
    int nv = nv_dist(rng);
    std::vector<std::string> verts;
    for (int i = 0; i < nv; ++i) verts.push_back("w" + std::to_string(i));

    std::uniform_int_distribution<int> ne_dist(1, max_edges);
    std::uniform_int_distribution<int> v_dist(0, nv - 1);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    int ne = ne_dist(rng);

    std::vector<EdgeRecord> edges;
    std::vector<std::pair<int, int>> pairs;
    int id = 0;
    for (int i = 0; i < ne; ++i) {
        int u = 0, v = 0;
        if (!pairs.empty() && coin(rng) < parallel_prob) {
            auto [pu, pv] = pairs[static_cast<std::size_t>(v_dist(rng)) % pairs.size()];
            u = pu;
            v = pv;
        } else {
            u = v_dist(rng);
            v = v_dist(rng);
            if (u == v) continue;
        }
        pairs.emplace_back(u, v);
        edges.push_back(EdgeRecord{"e" + std::to_string(id++), verts[static_cast<std::size_t>(u)],
                                   verts[static_cast<std::size_t>(v)]});
    }
    // keep only vertices that appear, to avoid isolated-vertex noise
    std::vector<std::string> used;
    for (const auto& e : edges) {
        used.push_back(e.u);
        used.push_back(e.v);
    }
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    if (used.empty()) used.push_back("w0");
    return Multigraph::build(std::move(used), std::move(edges));
}

/// Disjoint union with label prefixes so ground sets never collide.
inline Multigraph disjoint_union(const Multigraph& a, const Multigraph& b) {
    std::vector<std::string> verts;
    std::vector<EdgeRecord> edges;
    for (const auto& v : a.vertices()) verts.push_back("L" + v);
    for (const auto& v : b.vertices()) verts.push_back("R" + v);
    for (const auto& e : a.edges()) edges.push_back({"L" + e.id, "L" + e.u, "L" + e.v});
    for (const auto& e : b.edges()) edges.push_back({"R" + e.id, "R" + e.u, "R" + e.v});
    return Multigraph::build(std::move(verts), std::move(edges));
}

inline Multigraph relabeled(const Multigraph& g, std::mt19937& rng) {
    std::vector<std::string> old_names = g.vertices();
    std::vector<int> perm(old_names.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::string> fresh;
    for (std::size_t i = 0; i < old_names.size(); ++i)
        fresh.push_back("r" + std::to_string(perm[i]));
    auto rename = [&](const std::string& v) {
        auto it = std::lower_bound(old_names.begin(), old_names.end(), v);
        return fresh[static_cast<std::size_t>(it - old_names.begin())];
    };
    std::vector<std::string> verts;
    for (const auto& v : old_names) verts.push_back(rename(v));
    std::vector<EdgeRecord> edges;
    int id = 0;
    for (const auto& e : g.edges())
        edges.push_back({"f" + std::to_string(id++), rename(e.u), rename(e.v)});
    return Multigraph::build(std::move(verts), std::move(edges));
}

/// Brute-force matching enumerator: checks pairwise disjointness over raw
/// subsets. Exponential and proud; the oracle for f-vectors and face sets.
inline std::vector<std::vector<std::string>> brute_force_matchings(const Multigraph& g) {
    const auto& edges = g.edges();
    std::size_t m = edges.size();
    std::vector<std::vector<std::string>> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
        bool ok = true;
        for (std::size_t i = 0; i < m && ok; ++i)
            for (std::size_t j = i + 1; j < m && ok; ++j)
                if ((bits >> i & 1) && (bits >> j & 1))
                    if (edges[i].touches(edges[j].u) || edges[i].touches(edges[j].v)) ok = false;
        if (!ok) continue;
        std::vector<std::string> face;
        for (std::size_t i = 0; i < m; ++i)
            if (bits >> i & 1) face.push_back(edges[i].id);
        out.push_back(std::move(face));
    }
    return out;
}

inline HomologyProfile graph_homology(const Multigraph& g) {
    return reduced_homology(SimplicialComplex::matching_complex(g));
}

} // namespace mcx::testutil
