#include <corelab/vertex_set.hh>

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace corelab;

TEST_CASE("vertex set algebra")
{
    VertexSet a(10, { 1, 3, 5 }), b(10, { 3, 4 });
    CHECK((a | b).members() == std::vector<Vertex>{ 1, 3, 4, 5 });
    CHECK((a & b).members() == std::vector<Vertex>{ 3 });
    CHECK((a - b).members() == std::vector<Vertex>{ 1, 5 });
    CHECK(a.complement().size() == 7);
    CHECK(VertexSet(10, { 3 }).is_subset_of(a));
    CHECK_FALSE(b.is_subset_of(a));
    CHECK(a.first() == 1);
    CHECK(a.last() == 5);
    CHECK(a.next(3) == 5);
    CHECK(a.next(5) == -1);
    CHECK(VertexSet(10).first() == -1);
    CHECK(VertexSet::full(0).empty());
}

TEST_CASE("sets over different universes do not mix")
{
    CHECK_THROWS_AS(VertexSet(4) | VertexSet(5), std::invalid_argument);
    CHECK_THROWS_AS(VertexSet(4, { 4 }), std::out_of_range);
}

TEST_CASE("multi-word sets behave like single-word ones")
{
    VertexSet big(150, { 0, 63, 64, 127, 149 });
    CHECK(big.size() == 5);
    CHECK(big.next(63) == 64);
    CHECK(big.next(127) == 149);
    CHECK(big.last() == 149);
    CHECK(VertexSet::full(150).size() == 150);
    CHECK(big.complement().size() == 145);
}

TEST_CASE("canonical order is lexicographic on sorted member lists")
{
    auto lex = [] (const VertexSet & x, const VertexSet & y) {
        auto a = x.members(), b = y.members();
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    };

    CHECK(VertexSet(4, { 0, 2 }) < VertexSet(4, { 1, 3 }));
    CHECK(VertexSet(4, { 0, 2 }) < VertexSet(4, { 0, 2, 3 }));
    CHECK(VertexSet(4, { 0, 2, 3 }) < VertexSet(4, { 1 }));
    CHECK(VertexSet(4) < VertexSet(4, { 0 }));

    std::mt19937 rng(11);
    for (int trial = 0 ; trial < 2000 ; ++trial) {
        int n = 1 + rng() % 80;
        VertexSet x(n), y(n);
        for (int v = 0 ; v < n ; ++v) {
            if (rng() % 3 == 0) x.insert(v);
            if (rng() % 3 == 0) y.insert(v);
        }
        CHECK(((x <=> y) < 0) == lex(x, y));
        CHECK(((x <=> y) == 0) == (x == y));
    }
}
