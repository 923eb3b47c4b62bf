#pragma once

#include <corelab/graph.hh>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace corelab
{
    inline constexpr std::size_t default_omega_cap = 1'000'000;

    /// Thrown when an enumeration would exceed its member cap. Partial output is
    /// discarded: a truncated family must never be mistaken for the full one.
    class CapOverflow : public std::runtime_error
    {
        public:
            CapOverflow(const std::string & what, std::size_t cap, std::size_t found) :
                std::runtime_error(what + ": more than " + std::to_string(cap) + " members (stopped after " + std::to_string(found) + ")"),
                _cap(cap),
                _found(found)
            {
            }

            [[nodiscard]] auto cap() const -> std::size_t { return _cap; }
            [[nodiscard]] auto found() const -> std::size_t { return _found; }

        private:
            std::size_t _cap;
            std::size_t _found;
    };

    enum class FamilyKind
    {
        maximum_independent,
        maximum_clique,
        maximal_independent,
        arbitrary
    };

    auto to_string(FamilyKind kind) -> std::string;

    /// An explicit family of vertex sets over one universe, held in canonical order
    /// with duplicates removed.
    class MisFamily
    {
        public:
            MisFamily() = default;
            MisFamily(int universe, FamilyKind kind, std::vector<VertexSet> members);

            [[nodiscard]] auto universe() const -> int { return _universe; }
            [[nodiscard]] auto kind() const -> FamilyKind { return _kind; }
            [[nodiscard]] auto members() const -> const std::vector<VertexSet> & { return _members; }
            [[nodiscard]] auto size() const -> std::size_t { return _members.size(); }
            [[nodiscard]] auto empty() const -> bool { return _members.empty(); }
            [[nodiscard]] auto operator[] (std::size_t i) const -> const VertexSet & { return _members.at(i); }

            /// Intersection of all members; the whole universe for an empty family.
            [[nodiscard]] auto intersection() const -> VertexSet;
            /// Union of all members; empty for an empty family.
            [[nodiscard]] auto union_of() const -> VertexSet;

            [[nodiscard]] auto with_kind(FamilyKind kind) const -> MisFamily;

            friend auto operator== (const MisFamily &, const MisFamily &) -> bool = default;

        private:
            int _universe = 0;
            FamilyKind _kind = FamilyKind::arbitrary;
            std::vector<VertexSet> _members;
    };

    struct CoreCorona
    {
        VertexSet core;
        VertexSet corona;
        int alpha = 0;
        std::size_t omega_count = 0;
    };

    /// Exact α(G) by branch and bound: degree-0/1 vertices are taken greedily, otherwise
    /// branch on a maximum-degree vertex, pruning with a greedy clique cover bound.
    auto independence_number(const Graph & g) -> int;

    /// One maximum independent set (the first found by the same search).
    auto maximum_independent_set(const Graph & g) -> VertexSet;

    /// Every maximum independent set, in canonical order.
    auto enumerate_omega(const Graph & g, std::size_t cap = default_omega_cap) -> MisFamily;

    auto core_corona(const Graph & g, std::size_t cap = default_omega_cap) -> CoreCorona;
    auto core_corona(const MisFamily & omega) -> CoreCorona;

    /// Every inclusion-maximal independent set, in canonical order (Bron-Kerbosch with
    /// pivoting, run on non-adjacency).
    auto enumerate_maximal_independent(const Graph & g, std::size_t cap = default_omega_cap) -> MisFamily;

    /// Maximal independent sets among the sets contained in allowed (that is, of the
    /// induced subgraph G[allowed]), still expressed over g's universe.
    auto enumerate_maximal_independent_within(const Graph & g, const VertexSet & allowed,
            std::size_t cap = default_omega_cap) -> MisFamily;

    /// 2α(G) = |V(G)| and every maximal independent set has the same size.
    auto is_very_well_covered(const Graph & g, std::size_t cap = default_omega_cap) -> bool;

    /// ω(G), computed as α of the complement.
    auto clique_number(const Graph & g) -> int;

    /// Maximum independent sets of the complement, relabelled as maximum cliques.
    auto enumerate_max_cliques(const Graph & g, std::size_t cap = default_omega_cap) -> MisFamily;
}
