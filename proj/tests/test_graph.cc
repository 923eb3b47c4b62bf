#include <corelab/fixtures.hh>
#include <corelab/generate.hh>
#include <corelab/graph.hh>

#include <doctest.h>

#include <random>

using namespace corelab;

TEST_CASE("graph construction rejects loops and bad endpoints")
{
    CHECK_THROWS_AS(Graph(3, { { 1, 1 } }), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, { { 0, 3 } }), std::invalid_argument);
    Graph g(3, { { 0, 1 }, { 1, 0 } });
    CHECK(g.edge_count() == 1);
    CHECK(g.adjacent(1, 0));
}

TEST_CASE("neighbourhood")
{
    auto k2 = complete(2);
    CHECK(neighbourhood(k2, VertexSet(2, { 0 })) == VertexSet(2, { 1 }));

    auto c4 = cycle(4);
    CHECK(neighbourhood(c4, VertexSet(4, { 0, 2 })) == VertexSet(4, { 1, 3 }));

    // members of A that see each other are in N(A)
    auto k3 = complete(3);
    CHECK(neighbourhood(k3, VertexSet(3, { 0, 1 })) == VertexSet::full(3));
}

TEST_CASE("complement")
{
    CHECK(complement(complete(3)).edge_count() == 0);
    CHECK(complement(edgeless(5)) == complete(5));

    // C5 is self-complementary: the complement is the cycle 0-2-4-1-3-0
    auto c5c = complement(cycle(5));
    CHECK(c5c.edge_count() == 5);
    for (Vertex v = 0 ; v < 5 ; ++v)
        CHECK(c5c.degree(v) == 2);
    CHECK(c5c.adjacent(0, 2));
    CHECK(c5c.adjacent(2, 4));
    CHECK(c5c.adjacent(4, 1));
    CHECK(c5c.adjacent(1, 3));
    CHECK(c5c.adjacent(3, 0));
}

TEST_CASE("independence test")
{
    CHECK(is_independent(cycle(4), VertexSet(4, { 0, 2 })));
    CHECK_FALSE(is_independent(complete(2), VertexSet(2, { 0, 1 })));
    CHECK(is_independent(complete(4), VertexSet(4)));
    CHECK(is_independent(complete(4), VertexSet(4, { 3 })));

    auto fig1 = fixtures::set_collection_example();
    CHECK(is_independent(fig1, fig1.labelled_set({ "v1", "v2", "v3", "v6", "v8", "v10", "v12" })));
}

TEST_CASE("generators")
{
    auto s = star(5);
    CHECK(s.degree(0) == 4);
    for (Vertex v = 1 ; v < 5 ; ++v)
        CHECK(s.degree(v) == 1);

    auto c = cycle(4);
    CHECK(c.edge_count() == 4);

    auto a = generate({ GraphFamily::erdos_renyi, 12, 0.3, 0, 0, 42, { } });
    auto b = generate({ GraphFamily::erdos_renyi, 12, 0.3, 0, 0, 42, { } });
    CHECK(a == b);
    CHECK_FALSE(a == generate({ GraphFamily::erdos_renyi, 12, 0.3, 0, 0, 43, { } }));

    CHECK(erdos_renyi(9, 0.0, 1).edge_count() == 0);
    CHECK(erdos_renyi(9, 1.0, 1).edge_count() == 36);
    CHECK(complete_bipartite(2, 3).edge_count() == 6);
    CHECK_THROWS_AS(generate({ GraphFamily::erdos_renyi, 5, 1.5, 0, 0, 0, { } }), std::invalid_argument);
    CHECK(parse_graph_family("complete_bipartite") == GraphFamily::complete_bipartite);
}

TEST_CASE("structural invariants hold for random graphs")
{
    std::mt19937 rng(5);
    for (int trial = 0 ; trial < 200 ; ++trial) {
        int n = rng() % 20;
        auto g = erdos_renyi(n, (rng() % 11) / 10.0, rng());
        auto gc = complement(g);
        CHECK(complement(gc) == g);
        CHECK(g.edge_count() + gc.edge_count() == n * (n - 1) / 2);
        for (Vertex u = 0 ; u < n ; ++u) {
            CHECK_FALSE(g.adjacent(u, u));
            for (Vertex v = 0 ; v < n ; ++v)
                CHECK(g.adjacent(u, v) == g.adjacent(v, u));
        }

        // N is monotone
        VertexSet a(n), b(n);
        for (Vertex v = 0 ; v < n ; ++v) {
            if (rng() % 3 == 0) a.insert(v);
            if (a.contains(v) || rng() % 3 == 0) b.insert(v);
        }
        CHECK(neighbourhood(g, a).is_subset_of(neighbourhood(g, b)));
    }
}

TEST_CASE("fixtures")
{
    auto fig1 = fixtures::set_collection_example();
    CHECK(fig1.order() == 13);
    CHECK(fig1.edge_count() == 15);
    CHECK(fig1.label(0) == "v1");
    CHECK(fixtures::two_leaf_core_example().order() == 10);
    CHECK(fixtures::strict_inequality_example().order() == 9);
    CHECK(fixtures::non_ke_equality_example().order() == 7);
    CHECK(fixtures::non_ke_equality_example().label(6) == "u7");
    CHECK(fixtures::by_name("star6").edge_count() == 5);
    CHECK_THROWS_AS(fixtures::by_name("nope"), std::invalid_argument);
    CHECK_THROWS_AS(fixtures::by_name("starx"), std::invalid_argument);
}
