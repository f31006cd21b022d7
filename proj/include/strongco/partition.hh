/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef STRONGCO_GUARD_PARTITION_HH
#define STRONGCO_GUARD_PARTITION_HH 1

#include <strongco/vertex_set.hh>

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace strongco
{
    /**
     * An ordered list of non-empty, pairwise disjoint blocks covering
     * {0, ..., universe - 1}. Construction throws StructuralError otherwise.
     */
    class Partition
    {
        private:
            int _universe = 0;
            std::vector<VertexSet> _blocks;

        public:
            Partition() = default;
            Partition(int universe, std::vector<VertexSet> blocks);

            /// Blocks given as 0-based vertex lists.
            static auto from_lists(int universe, const std::vector<std::vector<Vertex>> & blocks) -> Partition;

            static auto singletons(int universe) -> Partition;

            auto universe() const noexcept -> int
            {
                return _universe;
            }

            auto size() const noexcept -> int
            {
                return static_cast<int>(_blocks.size());
            }

            auto block(int i) const -> const VertexSet &
            {
                return _blocks.at(i);
            }

            auto blocks() const -> const std::vector<VertexSet> &
            {
                return _blocks;
            }

            /// 0-based vertex lists, one per block.
            auto to_lists() const -> std::vector<std::vector<Vertex>>;

            /// Index of the block containing v.
            auto block_of(Vertex v) const -> int;

            auto operator== (const Partition &) const -> bool = default;
    };

    /**
     * One block per line, 1-based vertex ids separated by whitespace. Blank
     * lines and '#' comments are skipped. Throws ParseError on bad tokens and
     * StructuralError if the blocks do not partition {1, ..., universe}.
     */
    auto parse_partition(std::istream & in, int universe) -> Partition;
    auto parse_partition(std::string_view text, int universe) -> Partition;

    auto write_partition(std::ostream & out, const Partition & p) -> void;
    auto to_partition_text(const Partition & p) -> std::string;
}

#endif
