#include <corelab/search.hh>
#include <corelab/matching.hh>

#include <algorithm>
#include <atomic>
#include <thread>

namespace corelab
{
    auto classify_equality(const Graph & g, std::string graph_id, std::size_t omega_cap) -> EqualityClassification
    {
        auto omega = enumerate_omega(g, omega_cap);
        auto cc = core_corona(omega);

        EqualityClassification result;
        result.graph_id = std::move(graph_id);
        result.alpha = cc.alpha;
        result.core_size = cc.core.size();
        result.corona_size = cc.corona.size();
        result.is_equality = 2 * cc.alpha == result.core_size + result.corona_size;
        result.is_ke = cc.alpha + maximum_matching_size(g) == g.order();
        result.is_vwc = is_very_well_covered(g, omega_cap);
        result.has_unique_mis = omega.size() == 1;
        return result;
    }

    auto scan_equality(const std::vector<Graph> & graphs, std::size_t omega_cap, unsigned threads,
            const std::vector<std::string> & ids) -> ScanResult
    {
        ScanResult result;
        result.rows.resize(graphs.size());

        auto process = [&] (std::size_t i) {
            auto & row = result.rows[i];
            row.graph_id = i < ids.size() ? ids[i] : std::to_string(i);
            try {
                row.classification = classify_equality(graphs[i], row.graph_id, omega_cap);
            }
            catch (const std::exception & e) {
                row.error = e.what();
            }
        };

        if (threads == 0)
            threads = std::max(1u, std::thread::hardware_concurrency());
        threads = std::min<unsigned>(threads, std::max<std::size_t>(graphs.size(), 1));

        std::atomic<std::size_t> next{ 0 };
        {
            std::vector<std::jthread> workers;
            for (unsigned t = 0 ; t < threads ; ++t)
                workers.emplace_back([&] {
                    for (auto i = next++ ; i < graphs.size() ; i = next++)
                        process(i);
                });
        }

        auto & s = result.summary;
        for (auto & row : result.rows) {
            ++s.graphs;
            if (! row.classification) {
                ++s.errors;
                continue;
            }
            auto & c = *row.classification;
            ++(c.is_equality ? s.equality : s.non_equality);
            s.ke += c.is_ke;
            s.vwc += c.is_vwc;
            s.unique_mis += c.has_unique_mis;
            if (c.is_equality && ! c.is_ke && ! c.is_vwc && ! c.has_unique_mis)
                ++s.unexplained_equality;
            ++s.combinations["eq=" + std::to_string(c.is_equality) + ",ke=" + std::to_string(c.is_ke)
                + ",vwc=" + std::to_string(c.is_vwc) + ",unique=" + std::to_string(c.has_unique_mis)];
        }
        return result;
    }

    namespace
    {
        struct CollectionSearch
        {
            const std::vector<VertexSet> & members;
            int target;
            std::vector<std::size_t> chosen;
            std::vector<std::size_t> best;

            // Pre-order walk over index lists in lexicographic order, so the first list
            // reaching a size is the lexicographically smallest of that size.
            auto walk(std::size_t start, const VertexSet & common, const VertexSet & all) -> void
            {
                for (std::size_t i = start ; i < members.size() ; ++i) {
                    auto next_common = common & members[i];
                    auto next_all = all | members[i];
                    chosen.push_back(i);
                    if (next_common.size() + next_all.size() == target && chosen.size() > best.size())
                        best = chosen;
                    walk(i + 1, next_common, next_all);
                    chosen.pop_back();
                }
            }
        };
    }

    auto largest_equality_collection(const Graph & g, std::size_t subset_cap, std::size_t omega_cap) -> EqualityCollectionResult
    {
        auto omega = enumerate_omega(g, omega_cap);
        if (omega.size() > subset_cap)
            throw SubsetCapExceeded("|Omega(G)| = " + std::to_string(omega.size()) + " exceeds the subset cap of " + std::to_string(subset_cap));

        int alpha = omega[0].size();
        CollectionSearch search{ omega.members(), 2 * alpha, { }, { } };
        search.walk(0, VertexSet::full(g.order()), g.empty_set());

        std::vector<VertexSet> witness;
        for (auto i : search.best)
            witness.push_back(omega[i]);

        EqualityCollectionResult result;
        result.max_size = search.best.size();
        result.witness = MisFamily(g.order(), FamilyKind::maximum_independent, std::move(witness));
        result.omega_size = omega.size();
        result.exhaustive = true;
        return result;
    }
}
