#include <doctest.h>

#include <set>

#include "mcx/json_io.hpp"
#include "mcx/tilings.hpp"

using namespace mcx;
using namespace mcx::tilings;

namespace {

std::set<std::string> edge_ids(const Multigraph& g) {
    std::set<std::string> ids;
    for (const auto& e : g.edges()) ids.insert(e.id);
    return ids;
}

} // namespace

TEST_CASE("triangular tilings") {
    Multigraph t0 = triangular(0);
    CHECK(t0.vertex_count() == 2);
    CHECK(edge_ids(t0) == std::set<std::string>{"a0b0"});

    CHECK(edge_ids(triangular(1)) == std::set<std::string>{"a0a1", "a1b0", "a0b0"});

    CHECK(edge_ids(triangular(4)) ==
          std::set<std::string>{"a0a1", "a1a2", "b0b1", "b1b2", "a1b0", "a2b1", "a0b0",
                                "a1b1", "a2b2"});

    CHECK(triangular(5).vertex_count() == 7);
    CHECK(triangular(5).edge_count() == 11);

    for (int t = 0; t <= 50; ++t)
        CHECK(triangular(t).edge_count() == static_cast<std::size_t>(2 * t + 1));

    CHECK_THROWS_AS(triangular(-1), Error);
}

TEST_CASE("triangular reduction-step isomorphism") {
    for (int t = 5; t <= 12; ++t) {
        Multigraph g = triangular(t).delete_edges(EdgeSet({"a1b1"}), true);
        CHECK(g.delete_closed_neighborhood("a1b0").canonical_key() ==
              triangular(t - 3).canonical_key());
    }
}

TEST_CASE("pentagonal tilings") {
    CHECK(pentagonal(1).canonical_key() == cycle(5).canonical_key());
    CHECK(pentagonal(2).vertex_count() == 8);
    CHECK(pentagonal(2).edge_count() == 9);
    CHECK(pentagonal(4).vertex_count() == 14);
    CHECK(pentagonal(4).edge_count() == 17);
    CHECK_THROWS_AS(pentagonal(0), Error);

    // shrinking the first pentagon onto its far edge gives the next tiling down
    for (int t = 2; t <= 6; ++t) {
        Multigraph contracted = pentagonal(t).contract_path({"a2", "a1", "a0", "b0", "b1"});
        auto duplicates = contracted.parallel_edges("a2b1");
        REQUIRE(duplicates.size() == 1);
        CHECK(contracted.delete_edges(EdgeSet({duplicates[0]}), true).canonical_key() ==
              pentagonal(t - 1).canonical_key());
    }
}

TEST_CASE("pendant pentagonal tilings") {
    Multigraph h1 = pentagonal_pendant(1);
    CHECK(h1.vertex_count() == 6);
    CHECK(h1.edge_count() == 6);
    CHECK(pentagonal_pendant(2).edge_count() == 10);

    // the pendant edge hangs off b0 next to the first vertical and the base
    CHECK(h1.edge_neighborhood("b0p0", false).ids() ==
          std::vector<std::string>{"a0b0", "b0b1"});

    for (int t = 2; t <= 6; ++t)
        CHECK(pentagonal_pendant(t).delete_closed_neighborhood("a0b0").canonical_key() ==
              pentagonal_pendant(t - 1).canonical_key());
}

TEST_CASE("extended tilings") {
    for (int s = 4; s <= 12; ++s)
        CHECK(extended({s}, 0, 0).canonical_key() == cycle(s).canonical_key());

    Multigraph fig = extended({4, 6, 4, 6}, 2, 1);
    CHECK(fig.vertex_count() == 17);
    CHECK(fig.edge_count() == 20);

    Multigraph two = extended({4, 5}, 2, 1);
    CHECK(two.vertex_count() == 10);
    CHECK(two.edge_count() == 11);

    CHECK_THROWS_AS(extended({3}, 0, 0), Error);
    CHECK_THROWS_AS(extended({4, 4}, 0, 0, {1}), Error);  // overlaps the glue edge
    CHECK_THROWS_AS(extended({4, 4}, 0, 0, {3}), Error);  // shares a glue vertex
    CHECK(extended({4, 4}, 0, 0, {2}).edge_count() == 7);
    CHECK_THROWS_AS(extended({5, 5}, 0, 0, {2, 2}), Error); // too many offsets

    // a 5-cycle admits two glue positions; both are valid graphs
    CHECK(extended({5, 4}, 0, 0, {2}).edge_count() == 8);
    CHECK(extended({5, 4}, 0, 0, {3}).edge_count() == 8);
}

TEST_CASE("paths and cycles") {
    CHECK(path(2).edge_count() == 1);
    CHECK(path(1).edgeless());
    CHECK(cycle(3).canonical_key() == triangular(1).canonical_key());
    Multigraph c2 = cycle(2);
    CHECK(c2.edge_count() == 2);
    CHECK_FALSE(c2.is_simple());
    CHECK_THROWS_AS(path(0), Error);
    CHECK_THROWS_AS(cycle(1), Error);
}

TEST_CASE("generators are deterministic") {
    for (const TilingSpec& spec :
         {TilingSpec{.family = Family::Triangular, .t = 6},
          TilingSpec{.family = Family::Pentagonal, .t = 3},
          TilingSpec{.family = Family::Extended, .s = {4, 6}, .k = 2, .l = 1},
          TilingSpec{.family = Family::Cycle, .n = 7}}) {
        std::string a = io::dump(io::graph_to_json(generate(spec)));
        std::string b = io::dump(io::graph_to_json(generate(spec)));
        CHECK(a == b);
    }
}

TEST_CASE("edge-count inverses") {
    for (int t = 0; t <= 20; ++t)
        CHECK(triangular_t_from_edge_count(triangular(t).edge_count()) == t);
    for (int t = 1; t <= 10; ++t) {
        CHECK(pentagonal_t_from_edge_count(pentagonal(t).edge_count()) == t);
        CHECK(pendant_t_from_edge_count(pentagonal_pendant(t).edge_count()) == t);
    }
    CHECK_FALSE(pentagonal_t_from_edge_count(4).has_value());
}
