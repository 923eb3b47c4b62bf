#include <corelab/vertex_set.hh>

#include <algorithm>

namespace corelab
{
    namespace
    {
        auto words_for(int universe) -> std::size_t
        {
            return (static_cast<std::size_t>(universe) + VertexSet::word_bits - 1) / VertexSet::word_bits;
        }
    }

    VertexSet::VertexSet(int universe) :
        _universe(universe),
        _words(std::max<std::size_t>(words_for(universe), 1), 0)
    {
        if (universe < 0)
            throw std::invalid_argument("negative vertex set universe");
    }

    VertexSet::VertexSet(int universe, std::initializer_list<Vertex> members) :
        VertexSet(universe, std::vector<Vertex>(members))
    {
    }

    VertexSet::VertexSet(int universe, const std::vector<Vertex> & members) :
        VertexSet(universe)
    {
        for (auto v : members) {
            if (v < 0 || v >= universe)
                throw std::out_of_range("vertex " + std::to_string(v) + " outside universe of size " + std::to_string(universe));
            insert(v);
        }
    }

    auto VertexSet::full(int universe) -> VertexSet
    {
        VertexSet result(universe);
        for (std::size_t w = 0 ; w < result._words.size() ; ++w) {
            int lo = static_cast<int>(w) * word_bits;
            int count = std::clamp(universe - lo, 0, word_bits);
            result._words[w] = count == word_bits ? ~Word{0} : ((Word{1} << count) - 1);
        }
        return result;
    }

    auto VertexSet::size() const -> int
    {
        int result = 0;
        for (auto w : _words)
            result += std::popcount(w);
        return result;
    }

    auto VertexSet::empty() const -> bool
    {
        return std::all_of(_words.begin(), _words.end(), [] (Word w) { return w == 0; });
    }

    auto VertexSet::first() const -> Vertex
    {
        for (std::size_t w = 0 ; w < _words.size() ; ++w)
            if (_words[w])
                return static_cast<Vertex>(w * word_bits + std::countr_zero(_words[w]));
        return -1;
    }

    auto VertexSet::next(Vertex v) const -> Vertex
    {
        int start = v + 1;
        if (start >= _universe)
            return -1;
        std::size_t w = start / word_bits;
        Word bits = _words[w] & (~Word{0} << (start % word_bits));
        while (true) {
            if (bits)
                return static_cast<Vertex>(w * word_bits + std::countr_zero(bits));
            if (++w == _words.size())
                return -1;
            bits = _words[w];
        }
    }

    auto VertexSet::last() const -> Vertex
    {
        for (std::size_t w = _words.size() ; w-- > 0 ; )
            if (_words[w])
                return static_cast<Vertex>(w * word_bits + (word_bits - 1 - std::countl_zero(_words[w])));
        return -1;
    }

    auto VertexSet::members() const -> std::vector<Vertex>
    {
        std::vector<Vertex> result;
        result.reserve(size());
        for_each([&] (Vertex v) { result.push_back(v); });
        return result;
    }

    auto VertexSet::is_subset_of(const VertexSet & other) const -> bool
    {
        check_same_universe(other);
        for (std::size_t w = 0 ; w < _words.size() ; ++w)
            if (_words[w] & ~other._words[w])
                return false;
        return true;
    }

    auto VertexSet::intersects(const VertexSet & other) const -> bool
    {
        check_same_universe(other);
        for (std::size_t w = 0 ; w < _words.size() ; ++w)
            if (_words[w] & other._words[w])
                return true;
        return false;
    }

    auto VertexSet::complement() const -> VertexSet
    {
        return full(_universe) - *this;
    }

    auto VertexSet::operator|= (const VertexSet & other) -> VertexSet &
    {
        check_same_universe(other);
        for (std::size_t w = 0 ; w < _words.size() ; ++w)
            _words[w] |= other._words[w];
        return *this;
    }

    auto VertexSet::operator&= (const VertexSet & other) -> VertexSet &
    {
        check_same_universe(other);
        for (std::size_t w = 0 ; w < _words.size() ; ++w)
            _words[w] &= other._words[w];
        return *this;
    }

    auto VertexSet::operator-= (const VertexSet & other) -> VertexSet &
    {
        check_same_universe(other);
        for (std::size_t w = 0 ; w < _words.size() ; ++w)
            _words[w] &= ~other._words[w];
        return *this;
    }

    auto operator<=> (const VertexSet & a, const VertexSet & b) -> std::strong_ordering
    {
        if (auto c = a._universe <=> b._universe ; c != 0)
            return c;

        // Everything below the lowest differing vertex d is shared. The set holding d
        // comes first unless the other set has nothing beyond d (then it is a prefix).
        for (std::size_t w = 0 ; w < a._words.size() ; ++w) {
            auto diff = a._words[w] ^ b._words[w];
            if (! diff)
                continue;
            Vertex d = static_cast<Vertex>(w * VertexSet::word_bits + std::countr_zero(diff));
            const VertexSet & holder = a.contains(d) ? a : b;
            const VertexSet & other = a.contains(d) ? b : a;
            bool holder_first = other.next(d) != -1;
            bool a_first = (&holder == &a) == holder_first;
            return a_first ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }

    auto VertexSet::to_string() const -> std::string
    {
        std::string result = "{";
        bool first_member = true;
        for_each([&] (Vertex v) {
            if (! first_member)
                result += ',';
            first_member = false;
            result += std::to_string(v);
        });
        return result + "}";
    }
}
