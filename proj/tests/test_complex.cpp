#include <doctest.h>

#include <algorithm>
#include <random>

#include "mcx/complex.hpp"
#include "mcx/json_io.hpp"
#include "mcx/tilings.hpp"
#include "test_util.hpp"

using namespace mcx;
using namespace mcx::tilings;

TEST_CASE("matching complexes of the small tilings") {
    SimplicialComplex m1 = SimplicialComplex::matching_complex(triangular(1));
    CHECK(m1.dim() == 0);
    CHECK(m1.f_vector() == std::vector<long long>{1, 3});

    SimplicialComplex m2 = SimplicialComplex::matching_complex(triangular(2));
    std::vector<std::vector<std::string>> expect2 = {
        {"a0a1", "b0b1"}, {"a0b0", "a1b1"}, {"a1b0"}};
    CHECK(m2.facets() == expect2);
    CHECK(m2.f_vector() == std::vector<long long>{1, 5, 2});

    // f-vector against the brute-force matching enumerator
    auto faces = testutil::brute_force_matchings(triangular(2));
    std::vector<long long> f(3, 0);
    for (const auto& face : faces) f[face.size()]++;
    CHECK(m2.f_vector() == f);

    SimplicialComplex m4 = SimplicialComplex::matching_complex(triangular(4));
    CHECK(m4.ground().size() == 9);
    CHECK(m4.dim() == 2);
    CHECK(m4.faces_by_card()[3].size() == 3); // exactly three triangles

    SimplicialComplex empty = SimplicialComplex::matching_complex(Multigraph::build({}, {}));
    CHECK(empty.dim() == -1);
    CHECK(empty.f_vector() == std::vector<long long>{1});
}

TEST_CASE("matching complex equals the face set of all matchings") {
    std::mt19937 rng(5);
    for (int i = 0; i < 25; ++i) {
        Multigraph g = testutil::random_multigraph(rng, 6, 9);
        SimplicialComplex k = SimplicialComplex::matching_complex(g);
        auto faces = testutil::brute_force_matchings(g);
        CHECK(k.face_count() == faces.size());
        for (const auto& face : faces) CHECK(k.contains(face));
    }
}

TEST_CASE("independence complexes") {
    Multigraph k4 = Multigraph::build({"a", "b", "c", "d"},
                                      {{"ab", "a", "b"},
                                       {"ac", "a", "c"},
                                       {"ad", "a", "d"},
                                       {"bc", "b", "c"},
                                       {"bd", "b", "d"},
                                       {"cd", "c", "d"}});
    SimplicialComplex ik4 = SimplicialComplex::independence_complex(k4);
    CHECK(ik4.dim() == 0);
    CHECK(ik4.f_vector() == std::vector<long long>{1, 4});

    Multigraph edgeless = Multigraph::build({"a", "b", "c"}, {});
    SimplicialComplex full = SimplicialComplex::independence_complex(edgeless);
    CHECK(full.dim() == 2);
    CHECK(full.face_count() == 8);

    CHECK_THROWS_AS(SimplicialComplex::independence_complex(cycle(2)), Error);
}

TEST_CASE("matching complex is the independence complex of the line graph") {
    std::vector<Multigraph> pool;
    for (int t = 0; t <= 9; ++t) pool.push_back(triangular(t));
    for (int t = 1; t <= 4; ++t) pool.push_back(pentagonal(t));
    for (int t = 1; t <= 4; ++t) pool.push_back(pentagonal_pendant(t));
    pool.push_back(extended({4, 6}, 2, 1));
    pool.push_back(extended({5, 5}, 1, 0));
    pool.push_back(cycle(2));
    for (const auto& g : pool) {
        if (g.edge_count() > 20) continue;
        SimplicialComplex m = SimplicialComplex::matching_complex(g);
        SimplicialComplex i = SimplicialComplex::independence_complex(g.line_graph());
        CHECK(m == i);
    }
}

TEST_CASE("link and face deletion") {
    // lk of an edge-vertex is the matching complex of the surviving graph
    for (const char* e : {"a0b0", "a1b0", "a0a1"}) {
        Multigraph g = triangular(3);
        SimplicialComplex m = SimplicialComplex::matching_complex(g);
        SimplicialComplex lk = m.link({e});
        SimplicialComplex rest =
            SimplicialComplex::matching_complex(g.delete_closed_neighborhood(e));
        CHECK(lk == rest);
    }

    SimplicialComplex m = SimplicialComplex::matching_complex(triangular(2));
    CHECK(m.link({}) == m);
    CHECK_THROWS_AS(m.link({"a0a1", "a0b0"}), Error); // not a face

    // deleting an isolated vertex of the complex removes just that vertex
    SimplicialComplex m1 = SimplicialComplex::matching_complex(triangular(1));
    SimplicialComplex del = m1.face_deletion({"a0a1"});
    CHECK(del.ground().size() == 2);
    CHECK(del.dim() == 0);

    SimplicialComplex del2 = m.face_deletion({"a0a1", "b0b1"});
    CHECK(del2.ground().size() == 5);
    CHECK(del2.faces_by_card()[2].size() == 1);
    CHECK_THROWS_AS(m.face_deletion({}), Error);
}

TEST_CASE("downward closure") {
    std::mt19937 rng(13);
    for (int i = 0; i < 20; ++i) {
        Multigraph g = testutil::random_multigraph(rng, 6, 10);
        CHECK(SimplicialComplex::matching_complex(g).downward_closed());
    }
    SimplicialComplex big = SimplicialComplex::matching_complex(triangular(8));
    CHECK(big.downward_closed());
}

TEST_CASE("disjoint unions of graphs give joins of matching complexes") {
    std::mt19937 rng(17);
    for (int i = 0; i < 15; ++i) {
        Multigraph a = testutil::random_multigraph(rng, 4, 4);
        Multigraph b = testutil::random_multigraph(rng, 4, 4);
        Multigraph u = testutil::disjoint_union(a, b);

        // relabel the factors the same way the union does
        auto prefix = [](const Multigraph& g, const std::string& p) {
            std::vector<std::string> verts;
            std::vector<EdgeRecord> edges;
            for (const auto& v : g.vertices()) verts.push_back(p + v);
            for (const auto& e : g.edges()) edges.push_back({p + e.id, p + e.u, p + e.v});
            return Multigraph::build(std::move(verts), std::move(edges));
        };
        SimplicialComplex ma = SimplicialComplex::matching_complex(prefix(a, "L"));
        SimplicialComplex mb = SimplicialComplex::matching_complex(prefix(b, "R"));
        CHECK(SimplicialComplex::matching_complex(u) ==
              SimplicialComplex::join_complex(ma, mb));
    }
}

TEST_CASE("enumeration budgets") {
    Multigraph big = triangular(12); // 25 edges
    CHECK_THROWS_AS(SimplicialComplex::matching_complex(big), Error);
    SimplicialComplex capped = SimplicialComplex::matching_complex(big, 2);
    CHECK(capped.dim() == 1);
    CHECK(capped.ground().size() == 25);

    Multigraph many = path(26);
    CHECK_THROWS_AS(SimplicialComplex::independence_complex(many), Error);
}

TEST_CASE("facet serialization round trip") {
    SimplicialComplex m = SimplicialComplex::matching_complex(triangular(4));
    SimplicialComplex back = SimplicialComplex::from_facets(m.ground(), m.facets());
    CHECK(m == back);
}

TEST_CASE("json round trips") {
    std::mt19937 rng(41);
    for (int i = 0; i < 10; ++i) {
        Multigraph g = testutil::random_multigraph(rng, 6, 9);
        CHECK(io::graph_from_json(io::graph_to_json(g)) == g);
        SimplicialComplex k = SimplicialComplex::matching_complex(g);
        CHECK(io::complex_from_json(io::complex_to_json(k)) == k);
    }
    CHECK_THROWS_AS(io::parse("{oops"), Error);
}
