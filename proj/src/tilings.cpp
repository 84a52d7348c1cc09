#include "mcx/tilings.hpp"

#include <algorithm>
#include <string>

namespace mcx::tilings {
namespace {

// floor division for possibly-negative numerators (C++ / truncates)
int fdiv(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
int ceil_div(int a, int b) { return fdiv(a + b - 1, b); }

std::string lbl(const char* stem, int i) { return stem + std::to_string(i); }

// Edge id: endpoint labels concatenated in sorted order, matching the
// a_{i+1}b_i style names used throughout.
EdgeRecord mk(const std::string& u, const std::string& v) {
    if (u <= v) return EdgeRecord{u + v, u, v};
    return EdgeRecord{v + u, v, u};
}

} // namespace

const char* family_name(Family f) {
    switch (f) {
        case Family::Triangular: return "triangular";
        case Family::Pentagonal: return "pentagonal";
        case Family::PentagonalPendant: return "pentagonal_pendant";
        case Family::Extended: return "extended";
        case Family::Path: return "path";
        case Family::Cycle: return "cycle";
    }
    return "unknown";
}

std::optional<Family> family_from_name(const std::string& name) {
    for (Family f : {Family::Triangular, Family::Pentagonal, Family::PentagonalPendant,
                     Family::Extended, Family::Path, Family::Cycle})
        if (name == family_name(f)) return f;
    return std::nullopt;
}

Multigraph triangular(int t) {
    if (t < 0) fail(ErrorCode::InvalidArgument, "triangular tiling needs t >= 0");
    std::vector<std::string> verts;
    for (int i = 0; i <= ceil_div(t, 2); ++i) verts.push_back(lbl("a", i));
    for (int i = 0; i <= fdiv(t, 2); ++i) verts.push_back(lbl("b", i));

    std::vector<EdgeRecord> edges;
    for (int i = 0; i <= fdiv(t - 1, 2); ++i) edges.push_back(mk(lbl("a", i), lbl("a", i + 1)));
    for (int i = 0; i <= fdiv(t - 2, 2); ++i) edges.push_back(mk(lbl("b", i), lbl("b", i + 1)));
    for (int i = 0; i <= fdiv(t - 1, 2); ++i) edges.push_back(mk(lbl("a", i + 1), lbl("b", i)));
    for (int i = 0; i <= fdiv(t, 2); ++i) edges.push_back(mk(lbl("a", i), lbl("b", i)));
    return Multigraph::build(std::move(verts), std::move(edges));
}

Multigraph pentagonal(int t) {
    if (t < 1) fail(ErrorCode::InvalidArgument, "pentagonal tiling needs t >= 1");
    std::vector<std::string> verts;
    for (int i = 0; i <= ceil_div(3 * t, 2); ++i) verts.push_back(lbl("a", i));
    for (int i = 0; i <= fdiv(3 * t, 2); ++i) verts.push_back(lbl("b", i));

    std::vector<EdgeRecord> edges;
    for (int i = 0; i <= fdiv(3 * t - 1, 2); ++i) edges.push_back(mk(lbl("a", i), lbl("a", i + 1)));
    for (int i = 0; i <= fdiv(3 * t - 2, 2); ++i) edges.push_back(mk(lbl("b", i), lbl("b", i + 1)));
    for (int j = 0; j <= fdiv(t, 2); ++j) edges.push_back(mk(lbl("a", 3 * j), lbl("b", 3 * j)));
    for (int j = 0; j <= fdiv(t - 1, 2); ++j)
        edges.push_back(mk(lbl("a", 3 * j + 2), lbl("b", 3 * j + 1)));
    return Multigraph::build(std::move(verts), std::move(edges));
}

Multigraph pentagonal_pendant(int t) {
    Multigraph base = pentagonal(t);
    std::vector<std::string> verts = base.vertices();
    verts.push_back("p0");
    std::vector<EdgeRecord> edges = base.edges();
    edges.push_back(mk("b0", "p0"));
    return Multigraph::build(std::move(verts), std::move(edges));
}

int default_offset(int s) { return s / 2; }

ExtendedLayout extended_layout(const std::vector<int>& s, int k, int l,
                               const std::vector<int>& offsets) {
    int n = static_cast<int>(s.size());
    if (n < 1) fail(ErrorCode::InvalidArgument, "extended tiling needs at least one cycle");
    for (int si : s)
        if (si < 4) fail(ErrorCode::InvalidArgument, "every cycle length must be >= 4");
    if (k < 0 || l < 0) fail(ErrorCode::InvalidArgument, "pendant path lengths must be >= 0");
    std::vector<int> offs = offsets;
    if (offs.empty()) {
        for (int i = 1; i < n; ++i) offs.push_back(default_offset(s[i - 1]));
    }
    if (static_cast<int>(offs.size()) != std::max(0, n - 1))
        fail(ErrorCode::InvalidArgument, "need exactly n-1 glue offsets");
    for (int i = 0; i < static_cast<int>(offs.size()); ++i)
        if (offs[i] < 2 || offs[i] > s[i] - 2)
            fail(ErrorCode::InvalidArgument,
                 "offset " + std::to_string(offs[i]) + " invalid for a " +
                     std::to_string(s[i]) + "-cycle (need a disjoint edge)");

    ExtendedLayout layout;
    std::vector<std::string> verts = {"a0", "b0"};
    std::vector<EdgeRecord> edges;

    for (int i = 1; i <= n; ++i) {
        int len = s[i - 1];
        int j = (i < n) ? offs[i - 1] : default_offset(len);
        // cycle walk: w0 = a_{i-1}, w1 = b_{i-1}; the marked (glued or end)
        // edge sits at positions j, j+1
        std::vector<std::string> walk(len);
        walk[0] = lbl("a", i - 1);
        walk[1] = lbl("b", i - 1);
        for (int m = 2; m < len; ++m) {
            if (m == j)
                walk[m] = lbl("a", i);
            else if (m == j + 1)
                walk[m] = lbl("b", i);
            else
                walk[m] = "v" + std::to_string(i) + "_" + std::to_string(m);
            verts.push_back(walk[m]);
        }
        for (int m = 0; m < len; ++m) {
            if (i > 1 && m == 0) continue; // a_{i-1}b_{i-1} already laid down
            edges.push_back(mk(walk[m], walk[(m + 1) % len]));
        }
        layout.walks.push_back(std::move(walk));
        layout.marked.push_back(j);
    }

    layout.t_path.push_back(lbl("a", n));
    for (int m = 1; m <= k; ++m) {
        std::string next = lbl("t", m);
        verts.push_back(next);
        edges.push_back(mk(layout.t_path.back(), next));
        layout.t_path.push_back(next);
    }
    layout.u_path.push_back(lbl("b", n));
    for (int m = 1; m <= l; ++m) {
        std::string next = lbl("u", m);
        verts.push_back(next);
        edges.push_back(mk(layout.u_path.back(), next));
        layout.u_path.push_back(next);
    }
    layout.graph = Multigraph::build(std::move(verts), std::move(edges));
    return layout;
}

Multigraph extended(const std::vector<int>& s, int k, int l, const std::vector<int>& offsets) {
    return extended_layout(s, k, l, offsets).graph;
}

Multigraph path(int n) {
    if (n < 1) fail(ErrorCode::InvalidArgument, "path needs n >= 1 vertices");
    std::vector<std::string> verts;
    std::vector<EdgeRecord> edges;
    for (int i = 0; i < n; ++i) verts.push_back(lbl("v", i));
    for (int i = 0; i + 1 < n; ++i) edges.push_back(mk(lbl("v", i), lbl("v", i + 1)));
    return Multigraph::build(std::move(verts), std::move(edges));
}

Multigraph cycle(int n) {
    if (n == 2) {
        // the 2-cycle: a pair of parallel edges
        return Multigraph::build({"v0", "v1"},
                                 {EdgeRecord{"v0v1", "v0", "v1"}, EdgeRecord{"v0v1b", "v0", "v1"}});
    }
    if (n < 3) fail(ErrorCode::InvalidArgument, "cycle needs n >= 3 (or n = 2 for the 2-cycle)");
    std::vector<std::string> verts;
    std::vector<EdgeRecord> edges;
    for (int i = 0; i < n; ++i) verts.push_back(lbl("v", i));
    for (int i = 0; i < n; ++i) edges.push_back(mk(lbl("v", i), lbl("v", (i + 1) % n)));
    return Multigraph::build(std::move(verts), std::move(edges));
}

Multigraph generate(const TilingSpec& spec) {
    switch (spec.family) {
        case Family::Triangular: return triangular(spec.t);
        case Family::Pentagonal: return pentagonal(spec.t);
        case Family::PentagonalPendant: return pentagonal_pendant(spec.t);
        case Family::Extended: return extended(spec.s, spec.k, spec.l, spec.offsets);
        case Family::Path: return path(spec.n);
        case Family::Cycle: return cycle(spec.n);
    }
    fail(ErrorCode::InvalidArgument, "unknown family");
}

std::optional<int> triangular_t_from_edge_count(std::size_t edges) {
    if (edges < 1 || (edges - 1) % 2 != 0) return std::nullopt;
    return static_cast<int>((edges - 1) / 2);
}

std::optional<int> pentagonal_t_from_edge_count(std::size_t edges) {
    if (edges < 5 || (edges - 1) % 4 != 0) return std::nullopt;
    return static_cast<int>((edges - 1) / 4);
}

std::optional<int> pendant_t_from_edge_count(std::size_t edges) {
    if (edges < 6 || (edges - 2) % 4 != 0) return std::nullopt;
    return static_cast<int>((edges - 2) / 4);
}

} // namespace mcx::tilings
