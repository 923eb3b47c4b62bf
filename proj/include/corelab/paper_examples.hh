#pragma once

#include <corelab/graph.hh>

#include <optional>
#include <string>
#include <vector>

namespace corelab
{
    /// One replayed numeric claim about the built-in example graphs.
    struct ReplayRow
    {
        std::string name;
        std::string expected;
        std::string computed;
        bool ok = false;
    };

    struct ReplayOptions
    {
        /// Negative control: replaces the 13-vertex example with this graph.
        std::optional<Graph> fig1_override;
        int star_min = 2;
        int star_max = 8;
    };

    /// Recomputes every worked-example value (independence numbers, cores and coronas,
    /// the matching and the 10 ≤ 11 inequality, the invalid-collection demonstration,
    /// the König-Egerváry status of the two 9- and 7-vertex graphs, and the star family
    /// where the core/corona upper bound is attained).
    auto replay_paper_examples(const ReplayOptions & options = { }) -> std::vector<ReplayRow>;
}
