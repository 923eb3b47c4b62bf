#include "oracles.hh"

#include <corelab/fixtures.hh>
#include <corelab/generate.hh>
#include <corelab/matching.hh>
#include <corelab/mis.hh>

#include <doctest.h>

#include <random>

using namespace corelab;

TEST_CASE("matching from S - ∩Λ into ∪Λ - S on the worked example")
{
    auto g = fixtures::set_collection_example();
    auto a = g.labelled_set({ "v4", "v7" });
    auto b = g.labelled_set({ "v2", "v3", "v6", "v8", "v10", "v12", "v13" });
    auto cert = saturating_matching(g, a, b);
    REQUIRE(cert.saturating());
    CHECK(cert.matching().size() == 2);
    CHECK_FALSE(validate_matching(g, cert.matching()));
    // v4's only neighbour in b is v3 and v7's is v8, so the matching is forced
    std::vector<Edge> expected{ { *g.find_label("v4"), *g.find_label("v3") }, { *g.find_label("v7"), *g.find_label("v8") } };
    CHECK(cert.matching().edges == expected);
}

TEST_CASE("no matching from {v1,v4,v9,v12} into {v3,v6,v10}")
{
    auto g = fixtures::set_collection_example();
    auto a = g.labelled_set({ "v1", "v4", "v9", "v12" });
    auto b = g.labelled_set({ "v3", "v6", "v10" });
    auto cert = saturating_matching(g, a, b);
    REQUIRE_FALSE(cert.saturating());
    CHECK(violates_hall(g, cert.violator(), b));
    CHECK(cert.violator().is_subset_of(a));
    // v1 has no neighbour in b at all; minimal violators here are singletons
    CHECK(cert.violator() == g.labelled_set({ "v1" }));
}

TEST_CASE("empty side and precondition")
{
    auto g = cycle(5);
    auto cert = saturating_matching(g, g.empty_set(), VertexSet(5, { 1, 2 }));
    REQUIRE(cert.saturating());
    CHECK(cert.matching().size() == 0);
    CHECK_THROWS_AS(saturating_matching(g, VertexSet(5, { 1 }), VertexSet(5, { 1, 2 })), std::invalid_argument);
}

TEST_CASE("matching validator catches bad witnesses")
{
    auto g = path(4);
    CHECK(validate_matching(g, Matching{ { { 0, 2 } }, { }, { } }));
    CHECK(validate_matching(g, Matching{ { { 0, 1 }, { 1, 2 } }, { }, { } }));
    CHECK(validate_matching(g, Matching{ { { 0, 1 } }, VertexSet(4, { 0, 3 }), { } }));
    CHECK_FALSE(validate_matching(g, Matching{ { { 0, 1 }, { 2, 3 } }, VertexSet(4, { 0, 2 }), VertexSet(4, { 1, 3 }) }));
}

TEST_CASE("maximum matching on small graphs")
{
    CHECK(maximum_matching_size(cycle(5)) == 2);
    CHECK(maximum_matching_size(complete(4)) == 2);
    CHECK(maximum_matching_size(edgeless(4)) == 0);
    // G2: brute force over its 11 edges
    auto g2 = fixtures::non_ke_equality_example();
    CHECK(oracle::matching_number(g2) == 3);
    CHECK(maximum_matching_size(g2) == 3);
    // Petersen graph has a perfect matching; two triangles joined by an edge need blossoms
    Graph petersen(10, { { 0, 1 }, { 1, 2 }, { 2, 3 }, { 3, 4 }, { 4, 0 }, { 0, 5 }, { 1, 6 }, { 2, 7 }, { 3, 8 }, { 4, 9 },
            { 5, 7 }, { 7, 9 }, { 9, 6 }, { 6, 8 }, { 8, 5 } });
    CHECK(maximum_matching_size(petersen) == 5);
}

TEST_CASE("König-Egerváry recognition")
{
    CHECK(is_koenig_egervary(cycle(4)));
    CHECK(is_koenig_egervary(star(6)));
    CHECK(is_koenig_egervary(path(7)));
    CHECK(is_koenig_egervary(complete_bipartite(3, 5)));
    CHECK_FALSE(is_koenig_egervary(cycle(5)));
    CHECK_FALSE(is_koenig_egervary(fixtures::strict_inequality_example()));
    CHECK_FALSE(is_koenig_egervary(fixtures::non_ke_equality_example()));
}

TEST_CASE("saturating matching agrees with Hall's condition and returns minimal violators")
{
    std::mt19937_64 rng(99);
    for (int trial = 0 ; trial < 600 ; ++trial) {
        int n = 2 + rng() % 11;
        auto g = erdos_renyi(n, (1 + rng() % 8) / 10.0, rng());
        VertexSet a(n), b(n);
        for (Vertex v = 0 ; v < n ; ++v)
            switch (rng() % 3) {
                case 0: a.insert(v); break;
                case 1: b.insert(v); break;
                default: break;
            }

        auto cert = saturating_matching(g, a, b);
        CHECK(cert.saturating() == oracle::hall_holds(g, a, b));
        if (cert.saturating()) {
            CHECK_FALSE(validate_matching(g, cert.matching()));
            CHECK(cert.matching().size() == a.size());
        }
        else {
            auto & v = cert.violator();
            CHECK(v.is_subset_of(a));
            CHECK(violates_hall(g, v, b));
            for (auto x : v.members()) {
                auto smaller = v;
                smaller.erase(x);
                CHECK(oracle::hall_holds(g, smaller, b));
            }
        }
    }
}

TEST_CASE("maximum matching agrees with brute force")
{
    std::mt19937_64 rng(1234);
    for (int trial = 0 ; trial < 400 ; ++trial) {
        int n = rng() % 13;
        auto g = erdos_renyi(n, (rng() % 10) / 10.0, rng());
        auto m = maximum_matching(g);
        CHECK_FALSE(validate_matching(g, m));
        CHECK(m.size() == oracle::matching_number_recursive(g));
        CHECK(2 * m.size() <= n);
        if (g.edge_count() > 0)
            CHECK(m.size() >= 1);
    }
}
