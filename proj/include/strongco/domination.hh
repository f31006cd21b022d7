/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef STRONGCO_GUARD_DOMINATION_HH
#define STRONGCO_GUARD_DOMINATION_HH 1

#include <strongco/graph.hh>
#include <strongco/partition.hh>

#include <cstdint>
#include <string_view>
#include <vector>

namespace strongco
{
    /**
     * Plain: every x outside S has a neighbour in S. Strong: additionally that
     * neighbour y has deg(y) >= deg(x). Strong acceptance implies plain acceptance.
     */
    enum class DominationStyle
    {
        plain,
        strong
    };

    auto to_string(DominationStyle style) -> std::string_view;

    /// Accepts "plain" or "strong"; throws PreconditionError otherwise.
    auto parse_domination_style(std::string_view text) -> DominationStyle;

    /// Orders above this are rejected by the exhaustive routines unless a caller raises the limit.
    inline constexpr int default_exact_limit = 20;

    /**
     * For each vertex x, the set of vertices whose presence in S takes care of
     * x: x itself plus each neighbour allowed to dominate it under the style.
     * Then S dominates iff S meets every row. Rows are single words, so this
     * needs order <= 64.
     */
    class DominatorTable
    {
        private:
            int _order = 0;
            std::uint64_t _full = 0;
            std::vector<std::uint64_t> _closed;

        public:
            static constexpr int max_order = 64;

            /// Throws CapacityError above max_order.
            DominatorTable(const Graph & g, DominationStyle style);

            auto order() const noexcept -> int
            {
                return _order;
            }

            auto full() const noexcept -> std::uint64_t
            {
                return _full;
            }

            auto closed_dominators(Vertex x) const -> std::uint64_t
            {
                return _closed[x];
            }

            auto dominates(std::uint64_t set) const noexcept -> bool
            {
                for (auto row : _closed)
                    if (! (row & set))
                        return false;
                return true;
            }

            /// First vertex not handled by the set, or -1.
            auto first_undominated(std::uint64_t set) const noexcept -> Vertex
            {
                for (std::size_t x = 0 ; x < _closed.size() ; ++x)
                    if (! (_closed[x] & set))
                        return static_cast<Vertex>(x);
                return -1;
            }
    };

    /// Works for any order. V itself is always accepted.
    auto is_dominating(const Graph & g, const VertexSet & s, DominationStyle style) -> bool;

    /// Minimum size of an accepted set. Exact; branches on the dominators of the first unhandled vertex.
    auto gamma(const Graph & g, DominationStyle style) -> int;

    /// Every accepted set of size gamma(g, style), ascending as integers (v1 least significant).
    auto enumerate_min_cardinality_sds(const Graph & g, DominationStyle style) -> std::vector<VertexSet>;

    /// Number of accepted subsets, V included, by a full 2^n scan. Throws CapacityError above exact_limit.
    auto count_all_sds(const Graph & g, DominationStyle style, int exact_limit = default_exact_limit) -> long long;

    /// Drops vertices of s in index order whenever the rest still dominates. Requires s to dominate.
    auto minimal_dominating_subset(const Graph & g, const VertexSet & s, DominationStyle style) -> VertexSet;

    struct DomaticResult
    {
        int value = 0;
        Partition witness;
        long long nodes_explored = 0;
    };

    /**
     * Largest k such that V splits into k accepted sets, with the first such
     * partition in restricted-growth order as witness. Searches k downwards
     * from min_degree + 1.
     */
    auto domatic(const Graph & g, DominationStyle style) -> DomaticResult;
}

#endif
