#pragma once

#include <corelab/graph.hh>

#include <cstdint>
#include <string>
#include <vector>

namespace corelab
{
    enum class GraphFamily
    {
        erdos_renyi,
        star,
        path,
        cycle,
        complete_bipartite,
        explicit_edges
    };

    auto to_string(GraphFamily kind) -> std::string;
    auto parse_graph_family(const std::string & name) -> GraphFamily;

    struct GraphFamilySpec
    {
        GraphFamily kind = GraphFamily::erdos_renyi;
        int n = 0;
        double p = 0.0;
        int left = 0;
        int right = 0;
        std::uint64_t seed = 0;
        std::vector<Edge> edges;
    };

    /// Name of the generator behind erdos_renyi, recorded in reports. Edges are drawn in
    /// lexicographic (u, v) order; each is kept when the next 53-bit uniform draw from
    /// std::mt19937_64(seed) is below p.
    inline constexpr const char * erdos_renyi_prng = "mt19937_64/uniform53/lex-order";

    /// Deterministic for a fixed spec. star(n) is K_{1,n-1} with centre 0; path and cycle
    /// number vertices along the walk; complete_bipartite puts the left part first.
    /// Throws std::invalid_argument on a malformed spec.
    auto generate(const GraphFamilySpec & spec) -> Graph;

    auto erdos_renyi(int n, double p, std::uint64_t seed) -> Graph;
    auto star(int n) -> Graph;
    auto path(int n) -> Graph;
    auto cycle(int n) -> Graph;
    auto complete_bipartite(int left, int right) -> Graph;
    auto complete(int n) -> Graph;
    auto edgeless(int n) -> Graph;

    /// Mixes a base seed with stream indices (splitmix64) so campaign cells get
    /// independent, reproducible seeds.
    auto derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0) -> std::uint64_t;
}
