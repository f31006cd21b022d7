/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <strongco/vertex_set.hh>
#include <strongco/errors.hh>

#include <bit>
#include <string>

using std::uint64_t;
using std::vector;

namespace strongco
{
    namespace
    {
        auto words_for(int universe) -> std::size_t
        {
            return (static_cast<std::size_t>(universe) + 63) / 64;
        }

        auto check_universes(const VertexSet & a, const VertexSet & b) -> void
        {
            if (a.universe() != b.universe())
                throw PreconditionError("vertex sets over different universes ("
                        + std::to_string(a.universe()) + " vs " + std::to_string(b.universe()) + ")");
        }
    }

    VertexSet::VertexSet(int universe) :
        _universe(universe),
        _words(words_for(universe), 0)
    {
        if (universe < 0)
            throw PreconditionError("negative universe size");
    }

    VertexSet::VertexSet(int universe, std::initializer_list<Vertex> members) :
        VertexSet(universe)
    {
        for (auto v : members)
            set(v);
    }

    auto VertexSet::full(int universe) -> VertexSet
    {
        VertexSet result(universe);
        for (Vertex v = 0 ; v < universe ; ++v)
            result.set(v);
        return result;
    }

    auto VertexSet::from_members(int universe, const vector<Vertex> & members) -> VertexSet
    {
        VertexSet result(universe);
        for (auto v : members)
            result.set(v);
        return result;
    }

    auto VertexSet::from_mask(int universe, uint64_t mask) -> VertexSet
    {
        if (universe > 64)
            throw PreconditionError("from_mask needs a universe of at most 64 vertices");
        if (universe < 64 && (mask >> universe) != 0)
            throw PreconditionError("mask has bits outside the universe");
        VertexSet result(universe);
        if (universe > 0)
            result._words[0] = mask;
        return result;
    }

    auto VertexSet::set(Vertex v) -> void
    {
        if (v < 0 || v >= _universe)
            throw PreconditionError("vertex " + std::to_string(v) + " outside universe of size " + std::to_string(_universe));
        _words[v / 64] |= uint64_t{1} << (v % 64);
    }

    auto VertexSet::reset(Vertex v) -> void
    {
        if (v < 0 || v >= _universe)
            throw PreconditionError("vertex " + std::to_string(v) + " outside universe of size " + std::to_string(_universe));
        _words[v / 64] &= ~(uint64_t{1} << (v % 64));
    }

    auto VertexSet::test(Vertex v) const -> bool
    {
        if (v < 0 || v >= _universe)
            return false;
        return (_words[v / 64] >> (v % 64)) & 1;
    }

    auto VertexSet::count() const noexcept -> int
    {
        int result = 0;
        for (auto w : _words)
            result += std::popcount(w);
        return result;
    }

    auto VertexSet::empty() const noexcept -> bool
    {
        for (auto w : _words)
            if (w)
                return false;
        return true;
    }

    auto VertexSet::first() const noexcept -> Vertex
    {
        for (std::size_t i = 0 ; i < _words.size() ; ++i)
            if (_words[i])
                return static_cast<Vertex>(i * 64 + std::countr_zero(_words[i]));
        return -1;
    }

    auto VertexSet::members() const -> vector<Vertex>
    {
        vector<Vertex> result;
        for (std::size_t i = 0 ; i < _words.size() ; ++i)
            for (auto w = _words[i] ; w ; w &= w - 1)
                result.push_back(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
        return result;
    }

    auto VertexSet::to_mask() const -> uint64_t
    {
        if (_universe > 64)
            throw PreconditionError("to_mask needs a universe of at most 64 vertices");
        return _words.empty() ? 0 : _words[0];
    }

    auto VertexSet::operator|= (const VertexSet & other) -> VertexSet &
    {
        check_universes(*this, other);
        for (std::size_t i = 0 ; i < _words.size() ; ++i)
            _words[i] |= other._words[i];
        return *this;
    }

    auto VertexSet::operator&= (const VertexSet & other) -> VertexSet &
    {
        check_universes(*this, other);
        for (std::size_t i = 0 ; i < _words.size() ; ++i)
            _words[i] &= other._words[i];
        return *this;
    }

    auto VertexSet::operator-= (const VertexSet & other) -> VertexSet &
    {
        check_universes(*this, other);
        for (std::size_t i = 0 ; i < _words.size() ; ++i)
            _words[i] &= ~other._words[i];
        return *this;
    }

    auto VertexSet::intersects(const VertexSet & other) const -> bool
    {
        check_universes(*this, other);
        for (std::size_t i = 0 ; i < _words.size() ; ++i)
            if (_words[i] & other._words[i])
                return true;
        return false;
    }

    auto VertexSet::is_subset_of(const VertexSet & other) const -> bool
    {
        check_universes(*this, other);
        for (std::size_t i = 0 ; i < _words.size() ; ++i)
            if (_words[i] & ~other._words[i])
                return false;
        return true;
    }

    auto VertexSet::complement() const -> VertexSet
    {
        return full(_universe) - *this;
    }

    auto VertexSet::operator<=> (const VertexSet & other) const -> std::strong_ordering
    {
        if (auto c = _universe <=> other._universe ; c != 0)
            return c;
        for (std::size_t i = _words.size() ; i-- > 0 ; )
            if (auto c = _words[i] <=> other._words[i] ; c != 0)
                return c;
        return std::strong_ordering::equal;
    }

    auto operator| (VertexSet a, const VertexSet & b) -> VertexSet
    {
        return a |= b;
    }

    auto operator& (VertexSet a, const VertexSet & b) -> VertexSet
    {
        return a &= b;
    }

    auto operator- (VertexSet a, const VertexSet & b) -> VertexSet
    {
        return a -= b;
    }
}
