#include <corelab/matching.hh>
#include <corelab/mis.hh>

#include <deque>
#include <stdexcept>

namespace corelab
{
    namespace
    {
        struct BipartiteAugmenter
        {
            const Graph & g;
            const VertexSet & b;
            std::vector<Vertex> mate;   // mate[v] for v in A or B, -1 if free
            VertexSet seen;

            BipartiteAugmenter(const Graph & graph, const VertexSet & targets) :
                g(graph),
                b(targets),
                mate(graph.order(), -1),
                seen(graph.order())
            {
            }

            auto augment(Vertex u) -> bool
            {
                auto options = g.neighbours(u) & b;
                for (Vertex v = options.first() ; v != -1 ; v = options.next(v)) {
                    if (seen.contains(v))
                        continue;
                    seen.insert(v);
                    if (mate[v] == -1 || augment(mate[v])) {
                        mate[v] = u;
                        mate[u] = v;
                        return true;
                    }
                }
                return false;
            }

            // Matches as much of a as possible; returns the first vertex that cannot be
            // saturated, together with the A-side of its alternating tree (a violator
            // with exactly one more member than neighbours in B).
            auto run(const VertexSet & a) -> std::optional<VertexSet>
            {
                for (Vertex u = a.first() ; u != -1 ; u = a.next(u)) {
                    seen = g.empty_set();
                    if (! augment(u)) {
                        VertexSet tree(g.order());
                        tree.insert(u);
                        seen.for_each([&] (Vertex v) { tree.insert(mate[v]); });
                        return tree;
                    }
                }
                return std::nullopt;
            }
        };

        auto find_violator(const Graph & g, const VertexSet & a, const VertexSet & b) -> std::optional<VertexSet>
        {
            BipartiteAugmenter augmenter(g, b);
            return augmenter.run(a);
        }

        // Edmonds' blossom algorithm, BFS from each free vertex with blossom contraction.
        class Blossom
        {
            public:
                explicit Blossom(const Graph & g) :
                    _g(g),
                    _n(g.order()),
                    _mate(_n, -1),
                    _parent(_n),
                    _base(_n),
                    _used(_n),
                    _in_blossom(_n)
                {
                }

                auto run() -> std::vector<Vertex>
                {
                    // Greedy start keeps the augmentation count down.
                    for (Vertex u = 0 ; u < _n ; ++u)
                        if (_mate[u] == -1)
                            for (Vertex v = _g.neighbours(u).first() ; v != -1 ; v = _g.neighbours(u).next(v))
                                if (_mate[v] == -1) {
                                    _mate[u] = v;
                                    _mate[v] = u;
                                    break;
                                }

                    for (Vertex root = 0 ; root < _n ; ++root) {
                        if (_mate[root] != -1)
                            continue;
                        Vertex v = find_path(root);
                        while (v != -1) {
                            Vertex pv = _parent[v];
                            Vertex ppv = _mate[pv];
                            _mate[v] = pv;
                            _mate[pv] = v;
                            v = ppv;
                        }
                    }
                    return _mate;
                }

            private:
                const Graph & _g;
                int _n;
                std::vector<Vertex> _mate, _parent, _base;
                std::vector<char> _used, _in_blossom;

                auto lca(Vertex a, Vertex b) -> Vertex
                {
                    std::vector<char> marked(_n, 0);
                    while (true) {
                        a = _base[a];
                        marked[a] = 1;
                        if (_mate[a] == -1)
                            break;
                        a = _parent[_mate[a]];
                    }
                    while (true) {
                        b = _base[b];
                        if (marked[b])
                            return b;
                        b = _parent[_mate[b]];
                    }
                }

                auto mark_path(Vertex v, Vertex b, Vertex child) -> void
                {
                    while (_base[v] != b) {
                        _in_blossom[_base[v]] = _in_blossom[_base[_mate[v]]] = 1;
                        _parent[v] = child;
                        child = _mate[v];
                        v = _parent[_mate[v]];
                    }
                }

                auto find_path(Vertex root) -> Vertex
                {
                    std::fill(_used.begin(), _used.end(), 0);
                    std::fill(_parent.begin(), _parent.end(), -1);
                    for (Vertex i = 0 ; i < _n ; ++i)
                        _base[i] = i;

                    _used[root] = 1;
                    std::deque<Vertex> queue{ root };
                    while (! queue.empty()) {
                        Vertex v = queue.front();
                        queue.pop_front();
                        const auto & nv = _g.neighbours(v);
                        for (Vertex to = nv.first() ; to != -1 ; to = nv.next(to)) {
                            if (_base[v] == _base[to] || _mate[v] == to)
                                continue;
                            if (to == root || (_mate[to] != -1 && _parent[_mate[to]] != -1)) {
                                Vertex current_base = lca(v, to);
                                std::fill(_in_blossom.begin(), _in_blossom.end(), 0);
                                mark_path(v, current_base, to);
                                mark_path(to, current_base, v);
                                for (Vertex i = 0 ; i < _n ; ++i)
                                    if (_in_blossom[_base[i]]) {
                                        _base[i] = current_base;
                                        if (! _used[i]) {
                                            _used[i] = 1;
                                            queue.push_back(i);
                                        }
                                    }
                            }
                            else if (_parent[to] == -1) {
                                _parent[to] = v;
                                if (_mate[to] == -1)
                                    return to;
                                _used[_mate[to]] = 1;
                                queue.push_back(_mate[to]);
                            }
                        }
                    }
                    return -1;
                }
        };
    }

    auto validate_matching(const Graph & g, const Matching & m) -> std::optional<std::string>
    {
        VertexSet covered(g.order());
        VertexSet from_side(g.order());
        for (auto [u, v] : m.edges) {
            if (u < 0 || v < 0 || u >= g.order() || v >= g.order())
                return "edge endpoint out of range";
            if (! g.adjacent(u, v))
                return "pair " + g.label(u) + "-" + g.label(v) + " is not an edge";
            if (covered.contains(u) || covered.contains(v))
                return "edges share endpoint at " + g.label(covered.contains(u) ? u : v);
            covered.insert(u);
            covered.insert(v);
            from_side.insert(u);
            if (m.saturates && ! m.saturates->contains(u))
                return "edge " + g.label(u) + "-" + g.label(v) + " does not start in the saturated side";
            if (m.into && ! m.into->contains(v))
                return "edge " + g.label(u) + "-" + g.label(v) + " does not end in the target side";
        }
        if (m.saturates && ! m.saturates->is_subset_of(from_side))
            return "vertices " + g.format(*m.saturates - from_side) + " are not saturated";
        return std::nullopt;
    }

    auto violates_hall(const Graph & g, const VertexSet & violator, const VertexSet & b) -> bool
    {
        return (neighbourhood(g, violator) & b).size() < violator.size();
    }

    auto saturating_matching(const Graph & g, const VertexSet & a, const VertexSet & b) -> HallCertificate
    {
        if (a.intersects(b))
            throw std::invalid_argument("saturating_matching: sides intersect in " + g.format(a & b));

        BipartiteAugmenter augmenter(g, b);
        if (auto violator = augmenter.run(a)) {
            // Shrink until every one-vertex deletion is matchable; then every proper
            // subset is matchable, so the set itself is the only Hall violator in it.
            bool shrunk = true;
            while (shrunk) {
                shrunk = false;
                for (Vertex v = violator->first() ; v != -1 ; v = violator->next(v)) {
                    auto smaller = *violator;
                    smaller.erase(v);
                    if (auto inner = find_violator(g, smaller, b)) {
                        violator = inner;
                        shrunk = true;
                        break;
                    }
                }
            }
            return HallCertificate(*violator);
        }

        Matching result;
        for (Vertex u = a.first() ; u != -1 ; u = a.next(u))
            result.edges.emplace_back(u, augmenter.mate[u]);
        result.saturates = a;
        result.into = b;
        return HallCertificate(std::move(result));
    }

    auto maximum_matching(const Graph & g) -> Matching
    {
        auto mate = Blossom(g).run();
        Matching result;
        for (Vertex u = 0 ; u < g.order() ; ++u)
            if (mate[u] > u)
                result.edges.emplace_back(u, mate[u]);
        return result;
    }

    auto maximum_matching_size(const Graph & g) -> int
    {
        return maximum_matching(g).size();
    }

    auto is_koenig_egervary(const Graph & g) -> bool
    {
        return independence_number(g) + maximum_matching_size(g) == g.order();
    }
}
