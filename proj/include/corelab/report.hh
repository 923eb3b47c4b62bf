#pragma once

#include <corelab/graph.hh>
#include <corelab/lemmas.hh>
#include <corelab/search.hh>

#include <json.hpp>

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace corelab
{
    using json = nlohmann::ordered_json;

    auto tool_version() -> std::string;

    /// Vertex sets become label arrays sorted by vertex index.
    auto set_to_json(const Graph & g, const VertexSet & s) -> json;
    auto set_from_json(const Graph & g, const json & j) -> VertexSet;

    auto check_report_to_json(const Graph & g, const CheckReport & r) -> json;
    /// Inverse of check_report_to_json; throws std::invalid_argument on malformed input.
    auto check_report_from_json(const Graph & g, const json & j) -> CheckReport;

    struct Tally
    {
        std::size_t passed = 0;
        std::size_t failed = 0;
        std::size_t skipped = 0;
        std::size_t errors = 0;

        [[nodiscard]] auto total() const -> std::size_t { return passed + failed + skipped + errors; }
        auto add(const CheckReport & r) -> void;
        auto operator+= (const Tally & other) -> Tally &;
    };

    /// One graph's slice of a run report, built independently so graphs can be processed
    /// in parallel and appended in a fixed order.
    struct GraphEntry
    {
        json body;
        Tally tally;
        std::map<std::string, Tally> by_statement;
        bool error = false;
    };

    /// full == false keeps only non-passing checks, with per-statement counts.
    auto summarize_graph(const std::string & graph_id, const Graph & g, const SuiteResult & result, bool full) -> GraphEntry;

    /// Accumulates per-graph results into the report layout
    /// { version, spec, results: [...], summary }.
    class RunReport
    {
        public:
            explicit RunReport(json spec);

            auto add_graph(const std::string & graph_id, const Graph & g, const SuiteResult & result, bool full) -> void;
            auto add(GraphEntry entry) -> void;

            [[nodiscard]] auto tally() const -> const Tally & { return _tally; }
            [[nodiscard]] auto by_statement() const -> const std::map<std::string, Tally> & { return _by_statement; }
            [[nodiscard]] auto graphs_with_errors() const -> std::size_t { return _graph_errors; }

            /// wall_time_seconds is written as 0 when reproducible.
            [[nodiscard]] auto to_json(double wall_time_seconds, bool reproducible) const -> json;

        private:
            json _spec;
            json _results = json::array();
            Tally _tally;
            std::map<std::string, Tally> _by_statement;
            std::size_t _graph_errors = 0;
    };

    /// Reloads every stored check of a report, re-validates its witness against the
    /// stored graph, and checks that each verdict matches its lhs/rhs relation.
    /// Returns one line per problem found.
    auto revalidate_run_report(const json & report) -> std::vector<std::string>;

    auto classification_to_json(const EqualityClassification & c) -> json;
    auto scan_to_json(const ScanResult & scan) -> json;
    /// Header: graph_id,alpha,core,corona,is_equality,is_ke,is_vwc,unique_mis
    auto scan_to_csv(const ScanResult & scan) -> std::string;
    auto collection_to_json(const Graph & g, const EqualityCollectionResult & r) -> json;
}
