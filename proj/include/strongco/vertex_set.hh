/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef STRONGCO_GUARD_VERTEX_SET_HH
#define STRONGCO_GUARD_VERTEX_SET_HH 1

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace strongco
{
    using Vertex = int;

    /**
     * A subset of {0, ..., universe - 1}, stored as a bit vector of 64-bit
     * words. Bit v of word 0 is vertex 0, so for universes of at most 64
     * vertices the set is also its own integer encoding (see to_mask).
     */
    class VertexSet
    {
        private:
            int _universe = 0;
            std::vector<std::uint64_t> _words;

        public:
            VertexSet() = default;
            explicit VertexSet(int universe);
            VertexSet(int universe, std::initializer_list<Vertex> members);

            static auto full(int universe) -> VertexSet;
            static auto from_members(int universe, const std::vector<Vertex> & members) -> VertexSet;

            /// Requires universe <= 64.
            static auto from_mask(int universe, std::uint64_t mask) -> VertexSet;

            auto universe() const noexcept -> int
            {
                return _universe;
            }

            auto set(Vertex v) -> void;
            auto reset(Vertex v) -> void;
            auto test(Vertex v) const -> bool;

            auto count() const noexcept -> int;
            auto empty() const noexcept -> bool;
            auto first() const noexcept -> Vertex; ///< -1 if empty

            auto members() const -> std::vector<Vertex>;

            /// Throws PreconditionError if universe > 64.
            auto to_mask() const -> std::uint64_t;

            auto operator|= (const VertexSet &) -> VertexSet &;
            auto operator&= (const VertexSet &) -> VertexSet &;
            auto operator-= (const VertexSet &) -> VertexSet &;

            auto intersects(const VertexSet &) const -> bool;
            auto is_subset_of(const VertexSet &) const -> bool;
            auto complement() const -> VertexSet;

            auto operator== (const VertexSet &) const -> bool = default;

            /// Orders by universe, then by the set read as an integer with vertex 0 least significant.
            auto operator<=> (const VertexSet &) const -> std::strong_ordering;
    };

    auto operator| (VertexSet a, const VertexSet & b) -> VertexSet;
    auto operator& (VertexSet a, const VertexSet & b) -> VertexSet;
    auto operator- (VertexSet a, const VertexSet & b) -> VertexSet;
}

#endif
