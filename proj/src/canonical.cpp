// Exact canonical labeling for small multigraphs: equitable color refinement
// plus individualization search, minimum edge code over all leaves. Disjoint
// unions canonicalize per component (sorted component codes), which keeps the
// search away from the factorial symmetric cases.

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <tuple>
#include <vector>

#include "mcx/multigraph.hpp"

namespace mcx {
namespace {

struct CompactGraph {
    int n = 0;
    // adjacency with multiplicities, both directions
    std::vector<std::vector<std::pair<int, int>>> adj; // vertex -> (nbr, mult)
    std::vector<std::tuple<int, int, int>> edges;      // (u, v, mult), u < v
};

CompactGraph compact_from(const Multigraph& g) {
    CompactGraph c;
    std::map<std::string, int> idx;
    for (const auto& v : g.vertices()) {
        idx.emplace(v, c.n);
        ++c.n;
    }
    std::map<std::pair<int, int>, int> mult;
    for (const auto& e : g.edges()) {
        int u = idx.at(e.u), v = idx.at(e.v);
        if (u > v) std::swap(u, v);
        ++mult[{u, v}];
    }
    c.adj.assign(c.n, {});
    for (const auto& [uv, m] : mult) {
        c.edges.emplace_back(uv.first, uv.second, m);
        c.adj[uv.first].emplace_back(uv.second, m);
        c.adj[uv.second].emplace_back(uv.first, m);
    }
    return c;
}

// Refines to the coarsest equitable coloring. Color values carry the cell
// order, derived only from signatures, so the ordering is relabel-invariant.
std::vector<int> refine(const CompactGraph& g, std::vector<int> color) {
    while (true) {
        std::vector<std::pair<std::vector<int>, int>> sigs(g.n);
        for (int v = 0; v < g.n; ++v) {
            std::vector<int> s;
            s.push_back(color[v]);
            std::vector<std::pair<int, int>> nb;
            for (auto [w, m] : g.adj[v]) nb.emplace_back(color[w], m);
            std::sort(nb.begin(), nb.end());
            for (auto [cw, m] : nb) {
                s.push_back(cw);
                s.push_back(m);
            }
            sigs[v] = {std::move(s), v};
        }
        auto sorted = sigs;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> next(g.n);
        int c = -1;
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            if (i == 0 || sorted[i].first != sorted[i - 1].first) ++c;
            next[sorted[i].second] = c;
        }
        if (next == color) return color;
        color = std::move(next);
    }
}

using Code = std::vector<std::tuple<int, int, int>>;

Code encode(const CompactGraph& g, const std::vector<int>& color) {
    Code code;
    for (auto [u, v, m] : g.edges) {
        int pu = color[u], pv = color[v];
        if (pu > pv) std::swap(pu, pv);
        code.emplace_back(pu, pv, m);
    }
    std::sort(code.begin(), code.end());
    return code;
}

struct Search {
    const CompactGraph& g;
    Code best;
    bool have_best = false;
    long long leaves = 0;
    static constexpr long long kLeafCap = 5'000'000;

    explicit Search(const CompactGraph& graph) : g(graph) {}

    void run(std::vector<int> color) {
        color = refine(g, std::move(color));
        int target = -1;
        std::vector<int> cell;
        // first (smallest color value) non-singleton cell
        std::vector<int> count(g.n, 0);
        for (int v = 0; v < g.n; ++v) ++count[color[v]];
        for (int c = 0; c < g.n; ++c)
            if (count[c] >= 2) {
                target = c;
                break;
            }
        if (target < 0) {
            if (++leaves > kLeafCap)
                fail(ErrorCode::Internal, "canonical labeling search exceeded its leaf cap");
            Code code = encode(g, color);
            if (!have_best || code < best) {
                best = std::move(code);
                have_best = true;
            }
            return;
        }
        for (int v = 0; v < g.n; ++v)
            if (color[v] == target) cell.push_back(v);
        for (int v : cell) {
            std::vector<int> split(g.n);
            for (int w = 0; w < g.n; ++w) split[w] = 2 * color[w] + (w == v ? 0 : 1);
            run(std::move(split));
        }
    }
};

std::string canonical_component_code(const Multigraph& comp) {
    CompactGraph g = compact_from(comp);
    std::vector<int> initial(g.n, 0);
    Search search(g);
    search.run(std::move(initial));

    std::ostringstream os;
    os << g.n << ':';
    for (auto [u, v, m] : search.best) os << u << '-' << v << 'x' << m << ',';
    return os.str();
}

} // namespace

std::string Multigraph::canonical_key() const {
    std::size_t isolated = 0;
    for (const auto& v : vertices_)
        if (degree(v) == 0) ++isolated;

    std::vector<std::string> parts;
    for (const auto& comp : components()) parts.push_back(canonical_component_code(comp));
    std::sort(parts.begin(), parts.end());

    std::ostringstream os;
    os << "i" << isolated << "|";
    for (const auto& p : parts) os << p << ';';
    return os.str();
}

} // namespace mcx
