#include <corelab/graph.hh>

#include <stdexcept>

namespace corelab
{
    Graph::Graph(int n, const std::vector<Edge> & edges, std::vector<std::string> labels) :
        _n(n),
        _labels(std::move(labels))
    {
        if (n < 0)
            throw std::invalid_argument("negative vertex count");
        if (! _labels.empty() && static_cast<int>(_labels.size()) != n)
            throw std::invalid_argument("label count " + std::to_string(_labels.size()) + " does not match vertex count " + std::to_string(n));

        _adj.assign(n, VertexSet(n));
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for " + std::to_string(n) + " vertices");
            if (u == v)
                throw std::invalid_argument("loop at vertex " + std::to_string(u));
            _adj[u].insert(v);
            _adj[v].insert(u);
        }

        for (auto & row : _adj)
            _edge_count += row.size();
        _edge_count /= 2;
    }

    auto Graph::edges() const -> std::vector<Edge>
    {
        std::vector<Edge> result;
        result.reserve(_edge_count);
        for (Vertex u = 0 ; u < _n ; ++u)
            for (Vertex v = _adj[u].next(u) ; v != -1 ; v = _adj[u].next(v))
                result.emplace_back(u, v);
        return result;
    }

    auto Graph::label(Vertex v) const -> std::string
    {
        return _labels.empty() ? std::to_string(v) : _labels[v];
    }

    auto Graph::find_label(const std::string & label) const -> std::optional<Vertex>
    {
        for (Vertex v = 0 ; v < _n ; ++v)
            if (this->label(v) == label)
                return v;
        return std::nullopt;
    }

    auto Graph::labelled_set(const std::vector<std::string> & labels) const -> VertexSet
    {
        VertexSet result(_n);
        for (auto & l : labels) {
            auto v = find_label(l);
            if (! v)
                throw std::invalid_argument("unknown vertex label '" + l + "'");
            result.insert(*v);
        }
        return result;
    }

    auto Graph::format(const VertexSet & s) const -> std::string
    {
        std::string result = "{";
        bool first = true;
        s.for_each([&] (Vertex v) {
            if (! first)
                result += ',';
            first = false;
            result += label(v);
        });
        return result + "}";
    }

    auto Graph::induced(const VertexSet & keep) const -> Graph
    {
        auto kept = keep.members();
        std::vector<int> index(_n, -1);
        for (std::size_t i = 0 ; i < kept.size() ; ++i)
            index[kept[i]] = static_cast<int>(i);

        std::vector<Edge> sub_edges;
        for (auto [u, v] : edges())
            if (index[u] != -1 && index[v] != -1)
                sub_edges.emplace_back(index[u], index[v]);

        std::vector<std::string> sub_labels;
        if (has_labels())
            for (auto v : kept)
                sub_labels.push_back(_labels[v]);

        return Graph(static_cast<int>(kept.size()), sub_edges, std::move(sub_labels));
    }

    auto complement(const Graph & g) -> Graph
    {
        std::vector<Edge> edges;
        for (Vertex u = 0 ; u < g.order() ; ++u)
            for (Vertex v = u + 1 ; v < g.order() ; ++v)
                if (! g.adjacent(u, v))
                    edges.emplace_back(u, v);
        return Graph(g.order(), edges, g.labels());
    }

    auto neighbourhood(const Graph & g, const VertexSet & a) -> VertexSet
    {
        VertexSet result = g.empty_set();
        a.for_each([&] (Vertex v) { result |= g.neighbours(v); });
        return result;
    }

    auto is_independent(const Graph & g, const VertexSet & s) -> bool
    {
        bool ok = true;
        s.for_each([&] (Vertex v) { ok = ok && ! g.neighbours(v).intersects(s); });
        return ok;
    }

    auto is_clique(const Graph & g, const VertexSet & s) -> bool
    {
        bool ok = true;
        s.for_each([&] (Vertex v) {
            auto others = s;
            others.erase(v);
            ok = ok && others.is_subset_of(g.neighbours(v));
        });
        return ok;
    }
}
