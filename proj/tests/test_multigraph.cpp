#include <doctest.h>

#include <random>

#include "mcx/multigraph.hpp"
#include "mcx/tilings.hpp"
#include "test_util.hpp"

using namespace mcx;
using namespace mcx::tilings;

namespace {

Multigraph triangle() {
    return Multigraph::build({"a0", "a1", "b0"}, {{"a0a1", "a0", "a1"},
                                                  {"a1b0", "a1", "b0"},
                                                  {"a0b0", "a0", "b0"}});
}

} // namespace

TEST_CASE("build validates its input") {
    CHECK(Multigraph{}.vertex_count() == 0);
    CHECK(Multigraph::build({}, {}).edgeless());

    CHECK(triangle().edge_count() == 3);
    CHECK(triangle().canonical_key() == triangular(1).canonical_key());

    Multigraph c2 = Multigraph::build({"u", "v"}, {{"e1", "u", "v"}, {"e2", "u", "v"}});
    CHECK(c2.edge_count() == 2);
    CHECK_FALSE(c2.is_simple());

    CHECK_THROWS_AS(Multigraph::build({"u"}, {{"e", "u", "u"}}), Error);
    CHECK_THROWS_AS(Multigraph::build({"u"}, {{"e", "u", "v"}}), Error);
    CHECK_THROWS_AS(
        Multigraph::build({"u", "v"}, {{"e", "u", "v"}, {"e", "v", "u"}}), Error);
}

TEST_CASE("edge neighborhoods") {
    Multigraph t = triangle();
    CHECK(t.edge_neighborhood("a0a1", false).ids() == std::vector<std::string>{"a0b0", "a1b0"});

    Multigraph p4 = path(4);
    CHECK(p4.edge_neighborhood("v0v1", true).ids() ==
          std::vector<std::string>{"v0v1", "v1v2"});

    Multigraph c2 = cycle(2);
    CHECK(c2.edge_neighborhood("v0v1", true).ids() ==
          std::vector<std::string>{"v0v1", "v0v1b"});

    CHECK_THROWS_AS(t.edge_neighborhood("nope", false), Error);
}

TEST_CASE("delete_edges") {
    CHECK_THROWS_AS(triangle().delete_edges(EdgeSet({"a1b1"}), true), Error);

    Multigraph c4 = cycle(4);
    Multigraph opened = c4.delete_edges(EdgeSet({"v0v1"}), true);
    CHECK(opened.canonical_key() == path(4).canonical_key());

    // without drop_isolated the endpoints stay
    Multigraph kept = triangle().delete_edges(EdgeSet({"a0a1", "a1b0"}), false);
    CHECK(kept.vertex_count() == 3);
    Multigraph dropped = triangle().delete_edges(EdgeSet({"a0a1", "a1b0"}), true);
    CHECK(dropped.vertex_count() == 2);
}

TEST_CASE("delete_closed_neighborhood") {
    CHECK(triangle().delete_closed_neighborhood("a0a1").edgeless());

    // never leaves an edge adjacent to the deleted one
    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        Multigraph g = testutil::random_multigraph(rng);
        for (const auto& e : g.edges()) {
            Multigraph rest = g.delete_closed_neighborhood(e.id);
            for (const auto& f : rest.edges()) {
                CHECK_FALSE(f.touches(e.u));
                CHECK_FALSE(f.touches(e.v));
            }
        }
    }

    // the reduction step of the triangle-tiling recursion
    for (int t = 5; t <= 9; ++t) {
        Multigraph g = triangular(t).delete_edges(EdgeSet({"a1b1"}), true);
        CHECK(g.delete_closed_neighborhood("a1b0").canonical_key() ==
              triangular(t - 3).canonical_key());
    }

    // both sides collapse to a single edge
    Multigraph small = triangular(3).delete_closed_neighborhood("a1b0");
    CHECK(small.canonical_key() == triangular(0).canonical_key());
    CHECK(brute_force_isomorphic(small, triangular(0)));
}

TEST_CASE("contract_path") {
    Multigraph c5 = cycle(5);
    Multigraph c2 = c5.contract_path({"v0", "v1", "v2", "v3", "v4"});
    CHECK(c2.canonical_key() == cycle(2).canonical_key());
    CHECK(c2.edge_count() == c5.edge_count() - 3);
    CHECK(c2.vertex_count() == c5.vertex_count() - 3);

    Multigraph c6 = cycle(6);
    CHECK(c6.contract_path({"v0", "v1", "v2", "v3", "v4"}).canonical_key() ==
          cycle(3).canonical_key());

    // tiling proof step: contraction mints a parallel edge
    Multigraph g = triangular(6).delete_edges(EdgeSet({"a1b1", "a1b0"}), true);
    Multigraph contracted = g.contract_path({"a2", "a1", "a0", "b0", "b1"});
    CHECK(contracted.parallel_edges("a2b1") == std::vector<std::string>{"x0"});
    CHECK(contracted.delete_edges(EdgeSet({"x0"}), true).canonical_key() ==
          triangular(3).canonical_key());

    // preconditions
    CHECK_THROWS_AS(cycle(4).contract_path({"v0", "v1", "v2", "v3", "v0"}), Error);
    CHECK_THROWS_AS(triangular(4).contract_path({"a0", "a1", "a2", "b2", "b1"}), Error);
}

TEST_CASE("line_graph") {
    CHECK(triangle().line_graph().canonical_key() == triangle().canonical_key());
    for (int n = 3; n <= 8; ++n)
        CHECK(path(n).line_graph().canonical_key() == path(n - 1).canonical_key());
    // the two parallel edges share both endpoints, hence are adjacent
    Multigraph l = cycle(2).line_graph();
    CHECK(l.vertex_count() == 2);
    CHECK(l.edge_count() == 1);
    CHECK(brute_force_isomorphic(l, path(2)));

    // vertex count tracks the edge count, and isolated vertices are invisible
    std::mt19937 rng(3);
    for (int i = 0; i < 10; ++i) {
        Multigraph g = testutil::random_multigraph(rng, 6, 8);
        CHECK(g.line_graph().vertex_count() == g.edge_count());
        std::vector<std::string> verts = g.vertices();
        verts.push_back("zzz_isolated");
        Multigraph padded = Multigraph::build(std::move(verts), g.edges());
        CHECK(padded.line_graph() == g.line_graph());
    }
}

TEST_CASE("is_simplicial_edge") {
    Multigraph tri = triangle();
    for (const auto& e : tri.edges()) CHECK(tri.is_simplicial_edge(e.id));
    CHECK_FALSE(path(5).is_simplicial_edge("v1v2"));
    CHECK_FALSE(path(5).is_simplicial_edge("v2v3"));
    for (int t = 1; t <= 4; ++t)
        CHECK(pentagonal_pendant(t).is_simplicial_edge("b0p0"));

    // agreement with a clique check in the line graph
    std::mt19937 rng(11);
    std::vector<Multigraph> pool;
    for (int n = 2; n <= 5; ++n) pool.push_back(path(n));
    for (int n = 3; n <= 4; ++n) pool.push_back(cycle(n));
    pool.push_back(triangular(3));
    for (int i = 0; i < 40; ++i) pool.push_back(testutil::random_multigraph(rng, 6, 8));
    for (const auto& g : pool) {
        Multigraph lg = g.line_graph();
        for (const auto& e : g.edges()) {
            auto nbrs = g.edge_neighborhood(e.id, false).ids();
            bool clique = true;
            for (std::size_t i = 0; i < nbrs.size() && clique; ++i)
                for (std::size_t j = i + 1; j < nbrs.size() && clique; ++j)
                    if (!lg.edge_between(std::min(nbrs[i], nbrs[j]),
                                         std::max(nbrs[i], nbrs[j])))
                        clique = false;
            CHECK(g.is_simplicial_edge(e.id) == clique);
        }
    }
}

TEST_CASE("components") {
    CHECK(Multigraph::build({}, {}).components().empty());
    CHECK(Multigraph::build({"a", "b"}, {}).components().empty());
    CHECK(triangle().components().size() == 1);

    Multigraph two = Multigraph::build({"a", "b", "c", "d", "e"},
                                       {{"e1", "a", "b"}, {"e2", "b", "c"}, {"e3", "d", "e"}});
    auto comps = two.components();
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].edge_count() == 2);
    CHECK(comps[1].canonical_key() == path(2).canonical_key());
}

TEST_CASE("canonical_key is an isomorphism invariant") {
    std::mt19937 rng(2024);

    Multigraph c4a = cycle(4);
    Multigraph c4b = Multigraph::build(
        {"p", "q", "r", "s"},
        {{"1", "q", "p"}, {"2", "p", "r"}, {"3", "r", "s"}, {"4", "s", "q"}});
    CHECK(c4a.canonical_key() == c4b.canonical_key());

    CHECK(cycle(2).canonical_key() != path(2).canonical_key());

    // relabel invariance across the generated families
    std::vector<Multigraph> pool;
    for (int t = 0; t <= 7; ++t) pool.push_back(triangular(t)); // up to 15 edges
    for (int t = 1; t <= 3; ++t) pool.push_back(pentagonal(t));
    for (int t = 1; t <= 3; ++t) pool.push_back(pentagonal_pendant(t));
    pool.push_back(extended({4, 6}, 2, 1));
    for (const auto& g : pool)
        for (int i = 0; i < 5; ++i)
            CHECK(g.canonical_key() == testutil::relabeled(g, rng).canonical_key());

    // equal keys iff brute-force isomorphic, on random small graphs
    std::vector<Multigraph> small;
    for (int i = 0; i < 30; ++i) small.push_back(testutil::random_multigraph(rng, 6, 7));
    for (std::size_t i = 0; i < small.size(); ++i)
        for (std::size_t j = i + 1; j < small.size(); ++j) {
            if (small[i].vertex_count() > 8 || small[j].vertex_count() > 8) continue;
            bool keys = small[i].canonical_key() == small[j].canonical_key();
            bool iso = brute_force_isomorphic(small[i], small[j]);
            CHECK(keys == iso);
        }

    // multiplicities beyond two are told apart
    Multigraph triple = Multigraph::build(
        {"u", "v"}, {{"e1", "u", "v"}, {"e2", "u", "v"}, {"e3", "u", "v"}});
    CHECK(triple.canonical_key() != cycle(2).canonical_key());
    CHECK(triple.canonical_key() == testutil::relabeled(triple, rng).canonical_key());
}
