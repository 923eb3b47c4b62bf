#pragma once

#include <corelab/graph.hh>

#include <string>
#include <vector>

namespace corelab::fixtures
{
    // Edge lists read off the three small drawings used as worked examples (vertex
    // positions and line segments of each picture). Vertices carry their drawn labels.

    /// 13 vertices v1..v13, 15 edges.
    auto set_collection_example() -> Graph;
    /// 10 vertices v1..v10, 11 edges.
    auto two_leaf_core_example() -> Graph;
    /// 9 vertices v1..v9, 13 edges. Not König-Egerváry, strict core/corona inequality.
    auto strict_inequality_example() -> Graph;
    /// 7 vertices u1..u7, 11 edges. Not König-Egerváry, yet 2α = |core| + |corona|.
    auto non_ke_equality_example() -> Graph;

    /// Short names accepted on the command line: fig1, fig2, fig3-g1, fig3-g2, and
    /// starN (K_{1,N-1}, e.g. star5).
    auto by_name(const std::string & name) -> Graph;
    auto names() -> std::vector<std::string>;
}
