#include <corelab/mis.hh>

#include <algorithm>

namespace corelab
{
    namespace
    {
        auto degree_within(const Graph & g, Vertex v, const VertexSet & p) -> int
        {
            return (g.neighbours(v) & p).size();
        }

        // Number of cliques in a greedy clique cover of G[p]; never less than α(G[p]).
        auto clique_cover_bound(const Graph & g, VertexSet p) -> int
        {
            int cliques = 0;
            for (Vertex v = p.first() ; v != -1 ; v = p.first()) {
                p.erase(v);
                auto candidates = p & g.neighbours(v);
                for (Vertex u = candidates.first() ; u != -1 ; u = candidates.first()) {
                    p.erase(u);
                    candidates.erase(u);
                    candidates &= g.neighbours(u);
                }
                ++cliques;
            }
            return cliques;
        }

        struct MaximumSearch
        {
            const Graph & g;
            VertexSet best;
            int best_size = -1;

            auto search(VertexSet p, VertexSet current) -> void
            {
                // Degree 0 and 1 vertices belong to some maximum independent set of G[p].
                bool reduced = true;
                while (reduced) {
                    reduced = false;
                    for (Vertex v = p.first() ; v != -1 ; v = p.next(v)) {
                        if (degree_within(g, v, p) <= 1) {
                            current.insert(v);
                            p -= g.neighbours(v);
                            p.erase(v);
                            reduced = true;
                        }
                    }
                }

                int size = current.size();
                if (p.empty()) {
                    if (size > best_size) {
                        best_size = size;
                        best = current;
                    }
                    return;
                }

                if (size + p.size() <= best_size || size + clique_cover_bound(g, p) <= best_size)
                    return;

                Vertex branch = -1;
                int branch_degree = -1;
                for (Vertex v = p.first() ; v != -1 ; v = p.next(v))
                    if (auto d = degree_within(g, v, p) ; d > branch_degree) {
                        branch = v;
                        branch_degree = d;
                    }

                auto with = current;
                with.insert(branch);
                search(p - g.neighbours(branch) - VertexSet(g.order(), { branch }), with);

                p.erase(branch);
                search(p, current);
            }
        };

        // Lowest vertex first, include branch before exclude branch: members come out in
        // canonical (lexicographic) order without sorting.
        struct OmegaEnumeration
        {
            const Graph & g;
            int alpha;
            std::size_t cap;
            std::vector<VertexSet> found;

            auto search(VertexSet p, VertexSet current, int size) -> void
            {
                if (size == alpha) {
                    if (found.size() == cap)
                        throw CapOverflow("maximum independent set enumeration", cap, found.size());
                    found.push_back(current);
                    return;
                }
                if (size + p.size() < alpha || size + clique_cover_bound(g, p) < alpha)
                    return;

                Vertex v = p.first();
                auto with = current;
                with.insert(v);
                auto p_with = p - g.neighbours(v);
                p_with.erase(v);
                search(std::move(p_with), std::move(with), size + 1);

                p.erase(v);
                search(std::move(p), std::move(current), size);
            }
        };

        struct MaximalEnumeration
        {
            const Graph & g;
            const VertexSet & allowed;
            std::size_t cap;
            std::vector<VertexSet> found;

            auto non_neighbours(Vertex v) const -> VertexSet
            {
                auto result = allowed - g.neighbours(v);
                result.erase(v);
                return result;
            }

            auto search(const VertexSet & r, VertexSet p, VertexSet x) -> void
            {
                if (p.empty()) {
                    if (x.empty()) {
                        if (found.size() == cap)
                            throw CapOverflow("maximal independent set enumeration", cap, found.size());
                        found.push_back(r);
                    }
                    return;
                }

                auto pool = p | x;
                Vertex pivot = -1;
                int pivot_score = -1;
                for (Vertex u = pool.first() ; u != -1 ; u = pool.next(u))
                    if (auto score = (p & non_neighbours(u)).size() ; score > pivot_score) {
                        pivot = u;
                        pivot_score = score;
                    }

                auto branches = p - non_neighbours(pivot);
                for (Vertex v = branches.first() ; v != -1 ; v = branches.next(v)) {
                    auto nv = non_neighbours(v);
                    auto r_next = r;
                    r_next.insert(v);
                    search(r_next, p & nv, x & nv);
                    p.erase(v);
                    x.insert(v);
                }
            }
        };
    }

    auto to_string(FamilyKind kind) -> std::string
    {
        switch (kind) {
            case FamilyKind::maximum_independent: return "maximum_independent";
            case FamilyKind::maximum_clique:      return "maximum_clique";
            case FamilyKind::maximal_independent: return "maximal_independent";
            case FamilyKind::arbitrary:           return "arbitrary";
        }
        throw std::logic_error("bad FamilyKind");
    }

    MisFamily::MisFamily(int universe, FamilyKind kind, std::vector<VertexSet> members) :
        _universe(universe),
        _kind(kind),
        _members(std::move(members))
    {
        for (auto & m : _members)
            if (m.universe() != universe)
                throw std::invalid_argument("family member over universe " + std::to_string(m.universe())
                        + " in a family over " + std::to_string(universe));
        std::sort(_members.begin(), _members.end());
        _members.erase(std::unique(_members.begin(), _members.end()), _members.end());
    }

    auto MisFamily::intersection() const -> VertexSet
    {
        auto result = VertexSet::full(_universe);
        for (auto & m : _members)
            result &= m;
        return result;
    }

    auto MisFamily::union_of() const -> VertexSet
    {
        VertexSet result(_universe);
        for (auto & m : _members)
            result |= m;
        return result;
    }

    auto MisFamily::with_kind(FamilyKind kind) const -> MisFamily
    {
        auto result = *this;
        result._kind = kind;
        return result;
    }

    auto independence_number(const Graph & g) -> int
    {
        return maximum_independent_set(g).size();
    }

    auto maximum_independent_set(const Graph & g) -> VertexSet
    {
        MaximumSearch search{ g, g.empty_set() };
        search.search(g.vertices(), g.empty_set());
        return search.best;
    }

    auto enumerate_omega(const Graph & g, std::size_t cap) -> MisFamily
    {
        if (cap < 1)
            throw std::invalid_argument("enumeration cap must be at least 1");
        OmegaEnumeration enumeration{ g, independence_number(g), cap, { } };
        enumeration.search(g.vertices(), g.empty_set(), 0);
        return MisFamily(g.order(), FamilyKind::maximum_independent, std::move(enumeration.found));
    }

    auto core_corona(const Graph & g, std::size_t cap) -> CoreCorona
    {
        return core_corona(enumerate_omega(g, cap));
    }

    auto core_corona(const MisFamily & omega) -> CoreCorona
    {
        if (omega.empty())
            throw std::invalid_argument("core/corona of an empty family");
        return CoreCorona{ omega.intersection(), omega.union_of(), omega[0].size(), omega.size() };
    }

    auto enumerate_maximal_independent(const Graph & g, std::size_t cap) -> MisFamily
    {
        return enumerate_maximal_independent_within(g, g.vertices(), cap);
    }

    auto enumerate_maximal_independent_within(const Graph & g, const VertexSet & allowed, std::size_t cap) -> MisFamily
    {
        if (cap < 1)
            throw std::invalid_argument("enumeration cap must be at least 1");
        MaximalEnumeration enumeration{ g, allowed, cap, { } };
        enumeration.search(g.empty_set(), allowed, g.empty_set());
        return MisFamily(g.order(), FamilyKind::maximal_independent, std::move(enumeration.found));
    }

    auto is_very_well_covered(const Graph & g, std::size_t cap) -> bool
    {
        int alpha = independence_number(g);
        if (2 * alpha != g.order())
            return false;
        auto maximal = enumerate_maximal_independent(g, cap);
        return std::all_of(maximal.members().begin(), maximal.members().end(),
                [&] (const VertexSet & s) { return s.size() == alpha; });
    }

    auto clique_number(const Graph & g) -> int
    {
        return independence_number(complement(g));
    }

    auto enumerate_max_cliques(const Graph & g, std::size_t cap) -> MisFamily
    {
        return enumerate_omega(complement(g), cap).with_kind(FamilyKind::maximum_clique);
    }
}
