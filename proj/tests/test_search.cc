#include "oracles.hh"

#include <corelab/fixtures.hh>
#include <corelab/generate.hh>
#include <corelab/graph_io.hh>
#include <corelab/search.hh>

#include <doctest.h>

#include <random>

using namespace corelab;

namespace
{
    // One graph per isomorphism class on four vertices.
    const std::vector<std::string> four_vertex_classes{ "C?", "C@", "CB", "C`", "CJ", "CF", "Ck", "CN", "Cl", "C|", "C~" };

    auto triangles(int count) -> Graph
    {
        std::vector<Edge> edges;
        for (int t = 0 ; t < count ; ++t) {
            int b = 3 * t;
            edges.insert(edges.end(), { { b, b + 1 }, { b + 1, b + 2 }, { b, b + 2 } });
        }
        return Graph(3 * count, edges);
    }

    // Largest equality sub-collection by scanning index masks over the oracle's Ω.
    // Returns the maximum size and the lexicographically first index list attaining it.
    auto brute_largest(const Graph & g) -> std::pair<std::size_t, std::vector<std::vector<Vertex>>>
    {
        auto omega = oracle::omega(g);
        int alpha = oracle::alpha(g);
        std::size_t best = 0;
        std::vector<std::size_t> first;
        for (std::uint32_t mask = 1 ; mask < (1u << omega.size()) ; ++mask) {
            std::vector<int> count(g.order(), 0);
            int members = 0;
            for (std::size_t i = 0 ; i < omega.size() ; ++i)
                if (mask >> i & 1) {
                    ++members;
                    for (auto v : omega[i])
                        ++count[v];
                }
            int in_all = 0, in_any = 0;
            for (auto c : count) {
                in_all += c == members;
                in_any += c > 0;
            }
            if (in_all + in_any != 2 * alpha)
                continue;
            std::vector<std::size_t> indices;
            for (std::size_t i = 0 ; i < omega.size() ; ++i)
                if (mask >> i & 1)
                    indices.push_back(i);
            if (indices.size() > best || (indices.size() == best && indices < first)) {
                best = indices.size();
                first = indices;
            }
        }
        std::vector<std::vector<Vertex>> witness;
        for (auto i : first)
            witness.push_back(omega[i]);
        return { best, witness };
    }
}

TEST_CASE("classification of the example graphs")
{
    auto g2 = classify_equality(fixtures::non_ke_equality_example(), "G2");
    CHECK(g2.graph_id == "G2");
    CHECK(g2.is_equality);
    CHECK_FALSE(g2.is_ke);
    CHECK_FALSE(g2.is_vwc);
    CHECK_FALSE(g2.has_unique_mis);
    CHECK(g2.alpha == 3);
    CHECK(g2.core_size == 2);
    CHECK(g2.corona_size == 4);

    auto p3 = classify_equality(path(3));
    CHECK(p3.is_equality);
    CHECK(p3.has_unique_mis);

    auto g1 = classify_equality(fixtures::strict_inequality_example());
    CHECK_FALSE(g1.is_equality);

    auto k2 = classify_equality(complete(2));
    CHECK(k2.is_vwc);
    CHECK(k2.is_ke);

    // an isolated vertex plus a triangle meets both conditions of the predicate
    // but misses the equality: 1 + 4 != 2 * 2
    auto k1k3 = classify_equality(Graph(4, { { 1, 2 }, { 2, 3 }, { 1, 3 } }));
    CHECK(k1k3.is_vwc);
    CHECK_FALSE(k1k3.is_equality);
}

TEST_CASE("scan of all four-vertex graphs")
{
    std::vector<Graph> graphs;
    for (auto & text : four_vertex_classes)
        graphs.push_back(parse_graph6(text));
    auto scan = scan_equality(graphs, default_omega_cap, 3);
    REQUIRE(scan.rows.size() == 11);
    CHECK(scan.summary.graphs == 11);
    for (std::size_t i = 0 ; i < scan.rows.size() ; ++i) {
        auto & c = *scan.rows[i].classification;
        CHECK(c.graph_id == std::to_string(i));
        if (c.is_ke)
            CHECK(c.is_equality);
        if (c.has_unique_mis)
            CHECK(c.is_equality);
        CHECK(c.is_equality == (2 * oracle::alpha(graphs[i]) == c.core_size + c.corona_size));
    }
}

TEST_CASE("scan edge cases")
{
    auto empty = scan_equality({ });
    CHECK(empty.rows.empty());
    CHECK(empty.summary.graphs == 0);
    CHECK(empty.summary.equality == 0);

    auto pair = scan_equality({ fixtures::strict_inequality_example(), fixtures::non_ke_equality_example() }, default_omega_cap, 1, { "G1", "G2" });
    CHECK(pair.summary.equality == 1);
    CHECK(pair.summary.non_equality == 1);
    CHECK(pair.summary.unexplained_equality == 1);
    CHECK(pair.rows[0].graph_id == "G1");

    auto capped = scan_equality({ triangles(3), path(3) }, 5);
    CHECK(capped.summary.errors == 1);
    CHECK(capped.rows[0].error);
    CHECK(capped.rows[1].classification);
}

TEST_CASE("scan order does not depend on threads")
{
    std::vector<Graph> graphs;
    for (int i = 0 ; i < 40 ; ++i)
        graphs.push_back(erdos_renyi(8, 0.4, 1000 + i));
    auto one = scan_equality(graphs, default_omega_cap, 1);
    auto many = scan_equality(graphs, default_omega_cap, 8);
    for (std::size_t i = 0 ; i < graphs.size() ; ++i) {
        CHECK(one.rows[i].graph_id == many.rows[i].graph_id);
        CHECK(one.rows[i].classification->is_equality == many.rows[i].classification->is_equality);
        CHECK(one.rows[i].classification->corona_size == many.rows[i].classification->corona_size);
    }
    CHECK(one.summary.combinations == many.summary.combinations);
}

TEST_CASE("largest equality collection on small graphs")
{
    auto c4 = largest_equality_collection(cycle(4));
    CHECK(c4.max_size == 2);
    CHECK(c4.omega_size == 2);
    CHECK(c4.exhaustive);

    auto p3 = largest_equality_collection(path(3));
    CHECK(p3.max_size == 1);
    CHECK(p3.witness.size() == 1);

    auto g2 = largest_equality_collection(fixtures::non_ke_equality_example());
    CHECK(g2.omega_size == 2);
    CHECK(g2.max_size == 2);

    CHECK_THROWS_AS(largest_equality_collection(triangles(3), 10), SubsetCapExceeded);
}

TEST_CASE("witness tie-break is the first index list")
{
    // C6 has Ω = {0,2,4}, {1,3,5}; every singleton and the pair qualify
    auto r = largest_equality_collection(cycle(6));
    CHECK(r.max_size == 2);
    CHECK(r.witness.size() == 2);

    // P4 (0-1-2-3): Ω = {0,2}, {0,3}, {1,3} and the whole family qualifies
    auto p4 = largest_equality_collection(path(4));
    CHECK(p4.max_size == 3);

    // G1: the whole family falls short, so the witness is a proper sub-collection
    auto g1 = fixtures::strict_inequality_example();
    auto r1 = largest_equality_collection(g1);
    CHECK(r1.max_size < r1.omega_size);
    auto [size, witness] = brute_largest(g1);
    CHECK(r1.max_size == size);
    std::vector<std::vector<Vertex>> got;
    for (auto & m : r1.witness.members())
        got.push_back(m.members());
    CHECK(got == witness);
}

TEST_CASE("property: largest collection matches the brute-force subset scan")
{
    std::mt19937_64 rng(777);
    int checked = 0;
    for (int trial = 0 ; trial < 300 ; ++trial) {
        int n = std::uniform_int_distribution<int>(1, 9)(rng);
        auto g = erdos_renyi(n, std::uniform_real_distribution<double>(0.1, 0.9)(rng), rng());
        if (oracle::omega(g).size() > 12)
            continue;
        ++checked;
        auto r = largest_equality_collection(g);
        auto [size, witness] = brute_largest(g);
        CHECK(r.max_size == size);
        std::vector<std::vector<Vertex>> got;
        for (auto & m : r.witness.members())
            got.push_back(m.members());
        CHECK(got == witness);
        CHECK(r.max_size >= 1);
        CHECK(r.witness.size() == r.max_size);
        CHECK(2 * oracle::alpha(g) == static_cast<int>(r.witness.union_of().size() + r.witness.intersection().size()));
        auto c = classify_equality(g);
        CHECK(c.is_equality == (r.max_size == r.omega_size));
        bool isolated = false;
        for (Vertex v = 0 ; v < g.order() ; ++v)
            isolated = isolated || g.degree(v) == 0;
        if (c.is_ke || c.has_unique_mis || (c.is_vwc && ! isolated))
            CHECK(c.is_equality);
    }
    CHECK(checked > 200);
}
