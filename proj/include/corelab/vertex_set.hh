#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace corelab
{
    using Vertex = int;

    /// A subset of {0, ..., n-1}. Graphs up to 64 vertices fit in a single inline word,
    /// so set algebra on the hot paths never touches the heap. Larger universes spill
    /// into heap storage and work the same way.
    class VertexSet
    {
        public:
            using Word = std::uint64_t;
            static constexpr int word_bits = 64;

            VertexSet() : VertexSet(0) { }
            explicit VertexSet(int universe);
            VertexSet(int universe, std::initializer_list<Vertex> members);
            VertexSet(int universe, const std::vector<Vertex> & members);

            static auto full(int universe) -> VertexSet;

            [[nodiscard]] auto universe() const -> int { return _universe; }

            [[nodiscard]] auto contains(Vertex v) const -> bool
            {
                return (_words[v / word_bits] >> (v % word_bits)) & 1u;
            }

            auto insert(Vertex v) -> void { _words[v / word_bits] |= Word{1} << (v % word_bits); }
            auto erase(Vertex v) -> void { _words[v / word_bits] &= ~(Word{1} << (v % word_bits)); }

            [[nodiscard]] auto size() const -> int;
            [[nodiscard]] auto empty() const -> bool;

            /// Lowest member, or -1 when empty.
            [[nodiscard]] auto first() const -> Vertex;
            /// Lowest member strictly greater than v, or -1.
            [[nodiscard]] auto next(Vertex v) const -> Vertex;
            /// Highest member, or -1 when empty.
            [[nodiscard]] auto last() const -> Vertex;

            [[nodiscard]] auto members() const -> std::vector<Vertex>;

            [[nodiscard]] auto is_subset_of(const VertexSet & other) const -> bool;
            [[nodiscard]] auto intersects(const VertexSet & other) const -> bool;
            [[nodiscard]] auto complement() const -> VertexSet;

            auto operator|= (const VertexSet & other) -> VertexSet &;
            auto operator&= (const VertexSet & other) -> VertexSet &;
            auto operator-= (const VertexSet & other) -> VertexSet &;

            friend auto operator| (VertexSet a, const VertexSet & b) -> VertexSet { return a |= b; }
            friend auto operator& (VertexSet a, const VertexSet & b) -> VertexSet { return a &= b; }
            friend auto operator- (VertexSet a, const VertexSet & b) -> VertexSet { return a -= b; }

            friend auto operator== (const VertexSet & a, const VertexSet & b) -> bool
            {
                return a._universe == b._universe && a._words == b._words;
            }

            /// Canonical order: lexicographic on the sorted member lists, so {0,2} < {0,2,3} < {1}.
            friend auto operator<=> (const VertexSet & a, const VertexSet & b) -> std::strong_ordering;

            /// "{0,3,5}" using raw indices.
            [[nodiscard]] auto to_string() const -> std::string;

            template <typename F>
            auto for_each(F && f) const -> void
            {
                for (std::size_t w = 0 ; w < _words.size() ; ++w) {
                    Word bits = _words[w];
                    while (bits) {
                        int b = std::countr_zero(bits);
                        f(static_cast<Vertex>(w * word_bits + b));
                        bits &= bits - 1;
                    }
                }
            }

        private:
            int _universe = 0;
            boost::container::small_vector<Word, 1> _words;

            auto check_same_universe(const VertexSet & other) const -> void
            {
                if (other._universe != _universe)
                    throw std::invalid_argument("vertex sets over different universes combined ("
                            + std::to_string(_universe) + " vs " + std::to_string(other._universe) + ")");
            }
    };
}
