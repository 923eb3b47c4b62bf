#pragma once

#include <corelab/vertex_set.hh>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace corelab
{
    using Edge = std::pair<Vertex, Vertex>;

    /// Immutable simple undirected graph on vertices 0..n-1, stored as one adjacency
    /// bitset per vertex. Optional labels are carried for display only.
    class Graph
    {
        public:
            Graph() = default;

            /// Throws std::invalid_argument on loops or out-of-range endpoints. Duplicate
            /// edges (in either orientation) collapse.
            Graph(int n, const std::vector<Edge> & edges, std::vector<std::string> labels = { });

            [[nodiscard]] auto order() const -> int { return _n; }
            [[nodiscard]] auto edge_count() const -> int { return _edge_count; }

            [[nodiscard]] auto adjacent(Vertex u, Vertex v) const -> bool { return _adj[u].contains(v); }
            [[nodiscard]] auto neighbours(Vertex v) const -> const VertexSet & { return _adj[v]; }
            [[nodiscard]] auto degree(Vertex v) const -> int { return _adj[v].size(); }

            [[nodiscard]] auto vertices() const -> VertexSet { return VertexSet::full(_n); }
            [[nodiscard]] auto empty_set() const -> VertexSet { return VertexSet(_n); }
            [[nodiscard]] auto make_set(const std::vector<Vertex> & members) const -> VertexSet { return VertexSet(_n, members); }

            /// Edges (u, v) with u < v in lexicographic order.
            [[nodiscard]] auto edges() const -> std::vector<Edge>;

            [[nodiscard]] auto has_labels() const -> bool { return ! _labels.empty(); }
            /// The stored label, or the decimal index when the graph is unlabelled.
            [[nodiscard]] auto label(Vertex v) const -> std::string;
            [[nodiscard]] auto labels() const -> const std::vector<std::string> & { return _labels; }
            [[nodiscard]] auto find_label(const std::string & label) const -> std::optional<Vertex>;
            /// Builds a set from labels; throws std::invalid_argument on an unknown label.
            [[nodiscard]] auto labelled_set(const std::vector<std::string> & labels) const -> VertexSet;
            /// "{v1,v4,v7}" style rendering using labels.
            [[nodiscard]] auto format(const VertexSet & s) const -> std::string;

            /// Induced subgraph on the vertices of keep, renumbered in increasing order.
            [[nodiscard]] auto induced(const VertexSet & keep) const -> Graph;

            friend auto operator== (const Graph & a, const Graph & b) -> bool
            {
                return a._n == b._n && a._adj == b._adj;
            }

        private:
            int _n = 0;
            int _edge_count = 0;
            std::vector<VertexSet> _adj;
            std::vector<std::string> _labels;
    };

    /// Same vertex set and labels, edges exactly the non-edges of g.
    auto complement(const Graph & g) -> Graph;

    /// N(A) = { v : N(v) meets A }. Members of A can belong to N(A).
    auto neighbourhood(const Graph & g, const VertexSet & a) -> VertexSet;

    auto is_independent(const Graph & g, const VertexSet & s) -> bool;
    auto is_clique(const Graph & g, const VertexSet & s) -> bool;
}
