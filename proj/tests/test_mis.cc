#include "oracles.hh"

#include <corelab/fixtures.hh>
#include <corelab/generate.hh>
#include <corelab/mis.hh>

#include <doctest.h>

#include <random>

using namespace corelab;

namespace
{
    auto lists(const MisFamily & f) -> std::vector<std::vector<Vertex>>
    {
        std::vector<std::vector<Vertex>> result;
        for (auto & m : f.members())
            result.push_back(m.members());
        return result;
    }
}

TEST_CASE("independence number on small families")
{
    CHECK(independence_number(edgeless(6)) == 6);
    CHECK(independence_number(edgeless(0)) == 0);
    CHECK(independence_number(complete(5)) == 1);
    CHECK(independence_number(cycle(4)) == 2);
    CHECK(independence_number(cycle(7)) == 3);
    CHECK(independence_number(fixtures::set_collection_example()) == 7);
    CHECK(independence_number(fixtures::strict_inequality_example()) == 4);
    CHECK(independence_number(fixtures::non_ke_equality_example()) == 3);
}

TEST_CASE("omega enumeration")
{
    CHECK(lists(enumerate_omega(cycle(4))) == std::vector<std::vector<Vertex>>{ { 0, 2 }, { 1, 3 } });
    CHECK(lists(enumerate_omega(path(3))) == std::vector<std::vector<Vertex>>{ { 0, 2 } });
    CHECK(lists(enumerate_omega(edgeless(0))) == std::vector<std::vector<Vertex>>{ { } });

    auto fig2 = fixtures::two_leaf_core_example();
    CHECK(enumerate_omega(fig2).intersection() == fig2.labelled_set({ "v8", "v10" }));

    CHECK_THROWS_AS(enumerate_omega(edgeless(3), 0), std::invalid_argument);
}

TEST_CASE("omega cap overflow is an error, not a truncation")
{
    // perfect matching on 2k vertices: 2^k maximum independent sets
    std::vector<Edge> edges;
    for (int i = 0 ; i < 10 ; ++i)
        edges.emplace_back(2 * i, 2 * i + 1);
    Graph g(20, edges);
    CHECK(enumerate_omega(g, 1024).size() == 1024);
    try {
        (void) enumerate_omega(g, 1000);
        FAIL("expected overflow");
    }
    catch (const CapOverflow & e) {
        CHECK(e.cap() == 1000);
        CHECK(e.found() == 1000);
    }
    CHECK_THROWS_AS(core_corona(g, 10), CapOverflow);
}

TEST_CASE("core and corona of the fixtures")
{
    // v6 lies in every maximum set of this fixture
    auto fig1 = fixtures::set_collection_example();
    auto omega1 = oracle::omega(fig1);
    std::vector<Vertex> in_all;
    for (Vertex v = 0 ; v < fig1.order() ; ++v)
        if (std::all_of(omega1.begin(), omega1.end(), [&] (auto & m) { return std::find(m.begin(), m.end(), v) != m.end(); }))
            in_all.push_back(v);
    CHECK(core_corona(fig1).core.members() == in_all);
    CHECK(fig1.format(core_corona(fig1).core) == "{v1,v2,v6,v10}");

    auto g1 = fixtures::strict_inequality_example();
    auto cc1 = core_corona(g1);
    CHECK(g1.format(cc1.core) == "{v8,v9}");
    CHECK(g1.format(cc1.corona) == "{v1,v3,v4,v5,v7,v8,v9}");

    auto g2 = fixtures::non_ke_equality_example();
    auto cc2 = core_corona(g2);
    CHECK(g2.format(cc2.core) == "{u2,u4}");
    CHECK(g2.format(cc2.corona) == "{u2,u4,u6,u7}");

    auto s = star(5);
    auto ccs = core_corona(s);
    CHECK(ccs.core == VertexSet(5, { 1, 2, 3, 4 }));
    CHECK(ccs.corona == ccs.core);
}

TEST_CASE("maximal independent sets")
{
    CHECK(lists(enumerate_maximal_independent(complete(3))) == std::vector<std::vector<Vertex>>{ { 0 }, { 1 }, { 2 } });
    CHECK(lists(enumerate_maximal_independent(cycle(4))) == std::vector<std::vector<Vertex>>{ { 0, 2 }, { 1, 3 } });
    CHECK(lists(enumerate_maximal_independent(path(3))) == std::vector<std::vector<Vertex>>{ { 0, 2 }, { 1 } });
    CHECK(lists(enumerate_maximal_independent(edgeless(0))) == std::vector<std::vector<Vertex>>{ { } });

    // within a subset: C4 without vertex 0 is the path 1-2-3
    auto within = enumerate_maximal_independent_within(cycle(4), VertexSet(4, { 1, 2, 3 }));
    CHECK(lists(within) == std::vector<std::vector<Vertex>>{ { 1, 3 }, { 2 } });
}

TEST_CASE("very well-covered")
{
    CHECK(is_very_well_covered(cycle(4)));
    CHECK_FALSE(is_very_well_covered(complete(3)));
    CHECK_FALSE(is_very_well_covered(star(4)));
    CHECK(is_very_well_covered(complete(2)));
    // P4 has 2α = 4 but maximal sets {0,3} and {1,3},{0,2} all of size 2: very well-covered
    CHECK(is_very_well_covered(path(4)));
    // P6: {1,4} is maximal of size 2 while α = 3
    CHECK_FALSE(is_very_well_covered(path(6)));
}

TEST_CASE("cliques through the complement")
{
    CHECK(clique_number(complete(5)) == 5);
    CHECK(clique_number(cycle(5)) == 2);
    auto fig1 = fixtures::set_collection_example();
    CHECK(clique_number(complement(fig1)) == independence_number(fig1));

    CHECK(lists(enumerate_max_cliques(complete(3))) == std::vector<std::vector<Vertex>>{ { 0, 1, 2 } });
    CHECK(lists(enumerate_max_cliques(cycle(4))) == std::vector<std::vector<Vertex>>{ { 0, 1 }, { 0, 3 }, { 1, 2 }, { 2, 3 } });
    CHECK(lists(enumerate_max_cliques(edgeless(3))) == std::vector<std::vector<Vertex>>{ { 0 }, { 1 }, { 2 } });
    CHECK(enumerate_max_cliques(cycle(4)).kind() == FamilyKind::maximum_clique);
}

TEST_CASE("engine agrees with brute force on random graphs up to 10 vertices")
{
    std::mt19937_64 rng(2024);
    for (int trial = 0 ; trial < 400 ; ++trial) {
        int n = rng() % 11;
        double p = (rng() % 10) / 10.0;
        auto g = erdos_renyi(n, p, rng());

        int alpha = oracle::alpha(g);
        CHECK(independence_number(g) == alpha);
        CHECK(is_independent(g, maximum_independent_set(g)));

        auto omega = enumerate_omega(g);
        CHECK(lists(omega) == oracle::omega(g));
        for (std::size_t i = 1 ; i < omega.size() ; ++i)
            CHECK(omega[i - 1] < omega[i]);

        auto cc = core_corona(omega);
        for (auto & s : omega.members()) {
            CHECK(cc.core.is_subset_of(s));
            CHECK(s.is_subset_of(cc.corona));
        }

        auto maximal = enumerate_maximal_independent(g);
        CHECK(lists(maximal) == oracle::maximal_independent(g));
        int largest = 0;
        for (auto & m : maximal.members())
            largest = std::max(largest, m.size());
        CHECK(largest == alpha);
        for (auto & s : omega.members())
            CHECK(std::find(maximal.members().begin(), maximal.members().end(), s) != maximal.members().end());

        CHECK(clique_number(g) == independence_number(complement(g)));
        CHECK(clique_number(g) == oracle::alpha(complement(g)));
    }
}

TEST_CASE("branch and bound scales to 64 vertices")
{
    auto g = erdos_renyi(64, 0.5, 77);
    int alpha = independence_number(g);
    CHECK(is_independent(g, maximum_independent_set(g)));
    CHECK(alpha >= 6);
    // the complement of a union of small cliques: α = number of cliques
    std::vector<Edge> edges;
    for (int block = 0 ; block < 16 ; ++block)
        for (int i = 0 ; i < 4 ; ++i)
            for (int j = i + 1 ; j < 4 ; ++j)
                edges.emplace_back(block * 4 + i, block * 4 + j);
    CHECK(independence_number(Graph(64, edges)) == 16);
    CHECK(independence_number(Graph(70, edges)) == 22);
}
