#pragma once

#include <corelab/graph.hh>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace corelab
{
    class ParseError : public std::runtime_error
    {
        public:
            ParseError(const std::string & message, std::size_t offset) :
                std::runtime_error(message + " (at byte " + std::to_string(offset) + ")"),
                _message(message),
                _offset(offset)
            {
            }

            [[nodiscard]] auto message() const -> const std::string & { return _message; }
            [[nodiscard]] auto offset() const -> std::size_t { return _offset; }

        private:
            std::string _message;
            std::size_t _offset;
    };

    /// Decodes one graph6 string. A leading ">>graph6<<" header and trailing whitespace
    /// are accepted.
    auto parse_graph6(std::string_view text) -> Graph;
    auto serialize_graph6(const Graph & g) -> std::string;

    /// One graph per non-blank line.
    auto parse_graph6_lines(std::string_view text) -> std::vector<Graph>;

    /// DIMACS-like: "n <count>" then "e <u> <v>" lines with 1-based vertices. Lines starting
    /// with 'c' and blank lines are ignored. The vertex numbers become the graph's labels.
    auto parse_edge_list(std::string_view text) -> Graph;
    auto serialize_edge_list(const Graph & g) -> std::string;
}
