#pragma once

#include <corelab/graph.hh>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace corelab
{
    /// A set of pairwise non-incident edges. When produced as a matching "from A into B",
    /// each edge is oriented (a, b) and saturates / into record A and B.
    struct Matching
    {
        std::vector<Edge> edges;
        std::optional<VertexSet> saturates;
        std::optional<VertexSet> into;

        [[nodiscard]] auto size() const -> int { return static_cast<int>(edges.size()); }
    };

    /// Empty optional when m is a valid matching of g and honours its saturates/into
    /// claims; otherwise a description of the first problem found.
    auto validate_matching(const Graph & g, const Matching & m) -> std::optional<std::string>;

    /// Outcome of asking for a matching from A into B: either the matching, or a subset
    /// A' of A with |N(A') ∩ B| < |A'| all of whose proper subsets can be matched.
    class HallCertificate
    {
        public:
            explicit HallCertificate(Matching m) : _outcome(std::move(m)) { }
            explicit HallCertificate(VertexSet violator) : _outcome(std::move(violator)) { }

            [[nodiscard]] auto saturating() const -> bool { return std::holds_alternative<Matching>(_outcome); }
            [[nodiscard]] auto matching() const -> const Matching & { return std::get<Matching>(_outcome); }
            [[nodiscard]] auto violator() const -> const VertexSet & { return std::get<VertexSet>(_outcome); }

        private:
            std::variant<Matching, VertexSet> _outcome;
    };

    /// Hall deficiency witness check: |N(violator) ∩ b| < |violator|.
    auto violates_hall(const Graph & g, const VertexSet & violator, const VertexSet & b) -> bool;

    /// Matching from a into b using only g-edges between the two sides, found by
    /// augmenting paths. If none exists, returns an inclusion-minimal Hall violator.
    /// Throws std::invalid_argument if a and b intersect.
    auto saturating_matching(const Graph & g, const VertexSet & a, const VertexSet & b) -> HallCertificate;

    /// A maximum matching of a general graph (Edmonds' blossom algorithm).
    auto maximum_matching(const Graph & g) -> Matching;
    auto maximum_matching_size(const Graph & g) -> int;

    /// α(G) + μ(G) = |V(G)|.
    auto is_koenig_egervary(const Graph & g) -> bool;
}
