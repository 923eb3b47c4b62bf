#include <corelab/graph_io.hh>

#include <charconv>
#include <sstream>

namespace corelab
{
    namespace
    {
        constexpr int graph6_bias = 63;
        constexpr std::string_view graph6_header = ">>graph6<<";

        auto sextet(std::string_view text, std::size_t pos, std::size_t base) -> int
        {
            if (pos >= text.size())
                throw ParseError("graph6 data truncated", base + pos);
            int c = static_cast<unsigned char>(text[pos]);
            if (c < graph6_bias || c > graph6_bias + 63)
                throw ParseError("invalid graph6 character '" + std::string(1, text[pos]) + "'", base + pos);
            return c - graph6_bias;
        }

        auto trim(std::string_view s) -> std::string_view
        {
            while (! s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
                s.remove_suffix(1);
            while (! s.empty() && (s.front() == ' ' || s.front() == '\t'))
                s.remove_prefix(1);
            return s;
        }

        auto parse_int(std::string_view token, std::size_t line_offset, const char * what) -> long
        {
            long value = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc{ } || ptr != token.data() + token.size())
                throw ParseError(std::string("expected integer ") + what + ", got '" + std::string(token) + "'", line_offset);
            return value;
        }
    }

    auto parse_graph6(std::string_view text) -> Graph
    {
        std::size_t base = 0;
        if (text.starts_with(graph6_header)) {
            text.remove_prefix(graph6_header.size());
            base = graph6_header.size();
        }
        text = trim(text);
        if (text.empty())
            throw ParseError("empty graph6 string", base);
        if (text.front() == ':' || text.front() == '&')
            throw ParseError("sparse6/digraph6 input is not supported", base);

        std::size_t pos = 0;
        long n = sextet(text, pos++, base);
        if (n == 63) {
            n = 0;
            if (pos < text.size() && text[pos] == '~') {
                ++pos;
                for (int i = 0 ; i < 6 ; ++i)
                    n = (n << 6) | sextet(text, pos++, base);
            }
            else {
                for (int i = 0 ; i < 3 ; ++i)
                    n = (n << 6) | sextet(text, pos++, base);
            }
        }
        if (n > (1L << 20))
            throw ParseError("graph6 vertex count " + std::to_string(n) + " is unreasonably large", base);

        std::size_t bit_count = static_cast<std::size_t>(n) * (n - 1) / 2;
        std::size_t byte_count = (bit_count + 5) / 6;
        if (text.size() - pos < byte_count)
            throw ParseError("graph6 data truncated: expected " + std::to_string(byte_count) + " edge bytes, found " + std::to_string(text.size() - pos), base + text.size());
        if (text.size() - pos > byte_count)
            throw ParseError("trailing characters after graph6 data", base + pos + byte_count);

        std::vector<Edge> edges;
        std::size_t k = 0;
        for (Vertex j = 1 ; j < n ; ++j)
            for (Vertex i = 0 ; i < j ; ++i, ++k) {
                int value = sextet(text, pos + k / 6, base);
                if ((value >> (5 - k % 6)) & 1)
                    edges.emplace_back(i, j);
            }

        if (bit_count % 6 != 0) {
            int value = sextet(text, pos + byte_count - 1, base);
            int padding = static_cast<int>(6 - bit_count % 6);
            if (value & ((1 << padding) - 1))
                throw ParseError("non-zero graph6 padding bits", base + pos + byte_count - 1);
        }

        return Graph(static_cast<int>(n), edges);
    }

    auto serialize_graph6(const Graph & g) -> std::string
    {
        std::string result;
        long n = g.order();
        if (n < 63)
            result += static_cast<char>(n + graph6_bias);
        else if (n <= 258047) {
            result += '~';
            for (int shift = 12 ; shift >= 0 ; shift -= 6)
                result += static_cast<char>(((n >> shift) & 63) + graph6_bias);
        }
        else {
            result += "~~";
            for (int shift = 30 ; shift >= 0 ; shift -= 6)
                result += static_cast<char>(((n >> shift) & 63) + graph6_bias);
        }

        int acc = 0, filled = 0;
        for (Vertex j = 1 ; j < n ; ++j)
            for (Vertex i = 0 ; i < j ; ++i) {
                acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
                if (++filled == 6) {
                    result += static_cast<char>(acc + graph6_bias);
                    acc = filled = 0;
                }
            }
        if (filled)
            result += static_cast<char>((acc << (6 - filled)) + graph6_bias);
        return result;
    }

    auto parse_graph6_lines(std::string_view text) -> std::vector<Graph>
    {
        std::vector<Graph> result;
        std::size_t offset = 0;
        while (offset < text.size()) {
            auto end = text.find('\n', offset);
            if (end == std::string_view::npos)
                end = text.size();
            auto line = text.substr(offset, end - offset);
            if (! trim(line).empty()) {
                try {
                    result.push_back(parse_graph6(line));
                }
                catch (const ParseError & e) {
                    throw ParseError("line starting at byte " + std::to_string(offset) + ": " + e.message(), offset + e.offset());
                }
            }
            offset = end + 1;
        }
        return result;
    }

    auto parse_edge_list(std::string_view text) -> Graph
    {
        long n = -1;
        std::vector<Edge> edges;
        std::size_t offset = 0;
        while (offset < text.size()) {
            auto end = text.find('\n', offset);
            if (end == std::string_view::npos)
                end = text.size();
            auto line = trim(text.substr(offset, end - offset));
            std::size_t line_offset = offset;
            offset = end + 1;

            if (line.empty() || line.front() == 'c' || line.front() == '#')
                continue;

            std::vector<std::string_view> tokens;
            std::size_t p = 0;
            while (p < line.size()) {
                while (p < line.size() && (line[p] == ' ' || line[p] == '\t'))
                    ++p;
                auto q = p;
                while (q < line.size() && line[q] != ' ' && line[q] != '\t')
                    ++q;
                if (q > p)
                    tokens.push_back(line.substr(p, q - p));
                p = q;
            }

            if (tokens[0] == "n") {
                if (tokens.size() != 2)
                    throw ParseError("expected 'n <count>'", line_offset);
                if (n != -1)
                    throw ParseError("duplicate 'n' line", line_offset);
                n = parse_int(tokens[1], line_offset, "vertex count");
                if (n < 0)
                    throw ParseError("negative vertex count", line_offset);
            }
            else if (tokens[0] == "e") {
                if (n == -1)
                    throw ParseError("edge before 'n' line", line_offset);
                if (tokens.size() != 3)
                    throw ParseError("expected 'e <u> <v>'", line_offset);
                long u = parse_int(tokens[1], line_offset, "endpoint");
                long v = parse_int(tokens[2], line_offset, "endpoint");
                if (u < 1 || v < 1 || u > n || v > n)
                    throw ParseError("edge endpoint out of range 1.." + std::to_string(n), line_offset);
                if (u == v)
                    throw ParseError("loop at vertex " + std::to_string(u), line_offset);
                edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
            }
            else
                throw ParseError("unrecognised line '" + std::string(line) + "'", line_offset);
        }

        if (n == -1)
            throw ParseError("missing 'n' line", text.size());

        std::vector<std::string> labels;
        for (long v = 1 ; v <= n ; ++v)
            labels.push_back(std::to_string(v));
        return Graph(static_cast<int>(n), edges, std::move(labels));
    }

    auto serialize_edge_list(const Graph & g) -> std::string
    {
        std::ostringstream out;
        out << "n " << g.order() << '\n';
        for (auto [u, v] : g.edges())
            out << "e " << u + 1 << ' ' << v + 1 << '\n';
        return out.str();
    }
}
