#include <corelab/generate.hh>

#include <random>
#include <stdexcept>

namespace corelab
{
    auto to_string(GraphFamily kind) -> std::string
    {
        switch (kind) {
            case GraphFamily::erdos_renyi:        return "erdos_renyi";
            case GraphFamily::star:               return "star";
            case GraphFamily::path:               return "path";
            case GraphFamily::cycle:              return "cycle";
            case GraphFamily::complete_bipartite: return "complete_bipartite";
            case GraphFamily::explicit_edges:     return "explicit";
        }
        throw std::logic_error("bad GraphFamily");
    }

    auto parse_graph_family(const std::string & name) -> GraphFamily
    {
        for (auto kind : { GraphFamily::erdos_renyi, GraphFamily::star, GraphFamily::path, GraphFamily::cycle,
                GraphFamily::complete_bipartite, GraphFamily::explicit_edges })
            if (to_string(kind) == name)
                return kind;
        throw std::invalid_argument("unknown graph family '" + name + "'");
    }

    auto generate(const GraphFamilySpec & spec) -> Graph
    {
        auto need_n = [&] (int minimum) {
            if (spec.n < minimum)
                throw std::invalid_argument(to_string(spec.kind) + " needs n >= " + std::to_string(minimum));
        };

        switch (spec.kind) {
            case GraphFamily::erdos_renyi:
                need_n(0);
                if (! (spec.p >= 0.0 && spec.p <= 1.0))
                    throw std::invalid_argument("edge probability must lie in [0,1]");
                return erdos_renyi(spec.n, spec.p, spec.seed);
            case GraphFamily::star:
                need_n(1);
                return star(spec.n);
            case GraphFamily::path:
                need_n(0);
                return path(spec.n);
            case GraphFamily::cycle:
                need_n(3);
                return cycle(spec.n);
            case GraphFamily::complete_bipartite:
                if (spec.left < 0 || spec.right < 0)
                    throw std::invalid_argument("part sizes must be non-negative");
                return complete_bipartite(spec.left, spec.right);
            case GraphFamily::explicit_edges:
                need_n(0);
                return Graph(spec.n, spec.edges);
        }
        throw std::logic_error("bad GraphFamily");
    }

    auto erdos_renyi(int n, double p, std::uint64_t seed) -> Graph
    {
        std::mt19937_64 rng(seed);
        std::vector<Edge> edges;
        for (Vertex u = 0 ; u < n ; ++u)
            for (Vertex v = u + 1 ; v < n ; ++v) {
                double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
                if (draw < p)
                    edges.emplace_back(u, v);
            }
        return Graph(n, edges);
    }

    auto star(int n) -> Graph
    {
        std::vector<Edge> edges;
        for (Vertex v = 1 ; v < n ; ++v)
            edges.emplace_back(0, v);
        return Graph(n, edges);
    }

    auto path(int n) -> Graph
    {
        std::vector<Edge> edges;
        for (Vertex v = 1 ; v < n ; ++v)
            edges.emplace_back(v - 1, v);
        return Graph(n, edges);
    }

    auto cycle(int n) -> Graph
    {
        auto edges = path(n).edges();
        if (n >= 3)
            edges.emplace_back(0, n - 1);
        return Graph(n, edges);
    }

    auto complete_bipartite(int left, int right) -> Graph
    {
        std::vector<Edge> edges;
        for (Vertex u = 0 ; u < left ; ++u)
            for (Vertex v = 0 ; v < right ; ++v)
                edges.emplace_back(u, left + v);
        return Graph(left + right, edges);
    }

    auto complete(int n) -> Graph
    {
        return complement(edgeless(n));
    }

    auto edgeless(int n) -> Graph
    {
        return Graph(n, { });
    }

    auto derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) -> std::uint64_t
    {
        auto mix = [] (std::uint64_t z) {
            z += 0x9e3779b97f4a7c15ULL;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            return z ^ (z >> 31);
        };
        return mix(mix(mix(base) ^ a) ^ (b * 0xd6e8feb86659fd93ULL));
    }
}
