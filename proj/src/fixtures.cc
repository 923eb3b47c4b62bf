#include <corelab/fixtures.hh>
#include <corelab/generate.hh>

#include <stdexcept>

namespace corelab::fixtures
{
    namespace
    {
        // Edges given with the 1-based drawing labels.
        auto build(char prefix, int n, std::initializer_list<std::pair<int, int>> drawn) -> Graph
        {
            std::vector<std::string> labels;
            for (int v = 1 ; v <= n ; ++v)
                labels.push_back(prefix + std::to_string(v));
            std::vector<Edge> edges;
            for (auto [u, v] : drawn)
                edges.emplace_back(u - 1, v - 1);
            return Graph(n, edges, std::move(labels));
        }
    }

    auto set_collection_example() -> Graph
    {
        return build('v', 13, {
                { 1, 5 }, { 2, 5 }, { 3, 5 }, { 3, 4 }, { 4, 5 }, { 5, 6 }, { 5, 7 }, { 7, 8 },
                { 8, 9 }, { 6, 9 }, { 9, 10 }, { 10, 11 }, { 11, 12 }, { 11, 13 }, { 12, 13 } });
    }

    auto two_leaf_core_example() -> Graph
    {
        return build('v', 10, {
                { 1, 2 }, { 2, 3 }, { 1, 4 }, { 4, 5 }, { 5, 7 }, { 7, 9 }, { 9, 10 }, { 3, 5 },
                { 5, 6 }, { 8, 9 }, { 6, 7 } });
    }

    auto strict_inequality_example() -> Graph
    {
        return build('v', 9, {
                { 1, 2 }, { 2, 6 }, { 6, 9 }, { 1, 3 }, { 3, 4 }, { 1, 4 }, { 2, 3 }, { 2, 4 },
                { 2, 5 }, { 2, 7 }, { 5, 7 }, { 6, 7 }, { 6, 8 } });
    }

    auto non_ke_equality_example() -> Graph
    {
        return build('u', 7, {
                { 1, 5 }, { 5, 6 }, { 2, 3 }, { 3, 4 }, { 1, 2 }, { 1, 3 }, { 1, 4 }, { 2, 5 },
                { 3, 5 }, { 4, 5 }, { 6, 7 } });
    }

    auto by_name(const std::string & name) -> Graph
    {
        if (name == "fig1")
            return set_collection_example();
        if (name == "fig2")
            return two_leaf_core_example();
        if (name == "fig3-g1")
            return strict_inequality_example();
        if (name == "fig3-g2")
            return non_ke_equality_example();
        if (name.starts_with("star") && name.size() > 4) {
            int n = 0;
            try {
                std::size_t used = 0;
                n = std::stoi(name.substr(4), &used);
                if (used != name.size() - 4)
                    n = 0;
            }
            catch (const std::exception &) {
                n = 0;
            }
            if (n >= 1 && n <= 64)
                return star(n);
        }
        throw std::invalid_argument("unknown fixture '" + name + "'");
    }

    auto names() -> std::vector<std::string>
    {
        return { "fig1", "fig2", "fig3-g1", "fig3-g2", "starN" };
    }
}
