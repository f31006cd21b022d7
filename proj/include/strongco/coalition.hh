/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef STRONGCO_GUARD_COALITION_HH
#define STRONGCO_GUARD_COALITION_HH 1

#include <strongco/domination.hh>
#include <strongco/graph.hh>
#include <strongco/partition.hh>

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace strongco
{
    enum class BlockStatus
    {
        singleton_full_degree_sds,  ///< {v} with deg(v) = n - 1
        non_sds_with_partner,
        invalid_sds_block,          ///< dominates, but is not a universal singleton
        non_sds_without_partner
    };

    auto to_string(BlockStatus status) -> std::string_view;

    struct BlockVerdict
    {
        int block_index = 0;
        BlockStatus status = BlockStatus::non_sds_without_partner;
        std::vector<int> partners;  ///< every block it forms a coalition with, ascending
    };

    struct PartitionReport
    {
        bool valid = false;
        std::vector<BlockVerdict> verdicts;
    };

    /// Neither set dominates, their union does.
    auto forms_coalition(const Graph & g, const VertexSet & a, const VertexSet & b, DominationStyle style) -> bool;

    /// Throws StructuralError if p is not over g's vertex set.
    auto validate_partition(const Graph & g, const Partition & p, DominationStyle style) -> PartitionReport;

    /// Throws std::out_of_range for a bad block index.
    auto coalition_partner_count(const Graph & g, const Partition & p, int block_index, DominationStyle style) -> int;

    enum class BoundStatus
    {
        applied,
        unavailable
    };

    struct NamedBound
    {
        std::string name;  ///< order, delta2, sds_count, family_F
        long long value = 0;
        BoundStatus status = BoundStatus::applied;
    };

    struct UpperBounds
    {
        int bound = 0;
        std::vector<NamedBound> reasons;

        auto applied_names() const -> std::vector<std::string>;
    };

    /**
     * Upper bounds on the coalition number. Always: the order n. Strong style
     * only: 0 for non-complete graphs with a universal vertex (reported alone);
     * 2 + 2Δ when δ = 1; r + 1 when a single vertex attains Δ <= n - 2, with r
     * the number of strong dominating sets (only when n <= exact_limit, else
     * listed as unavailable).
     */
    auto upper_bounds(const Graph & g, DominationStyle style, int exact_limit = default_exact_limit) -> UpperBounds;

    struct SolverOptions
    {
        int exact_limit = default_exact_limit;
        unsigned workers = 1;

        /// When false, k starts at n and no short-circuit is taken. Used to check the bounds independently.
        bool use_bounds = true;
    };

    struct SolveResult
    {
        int value = 0;
        std::optional<Partition> witness;  ///< absent exactly when value = 0
        bool certified = false;            ///< every k above value was refuted
        std::string certificate;           ///< "exhaustive" or "family_F"
        long long nodes_explored = 0;
        std::chrono::nanoseconds wall_time{ 0 };
        UpperBounds bounds;
    };

    /**
     * Exact SC(G) (strong) or C(G) (plain). For k from the upper bound down to
     * 1, enumerates partitions into exactly k blocks as restricted growth
     * strings, cutting a branch when a block of two or more vertices already
     * dominates or too few vertices remain to open the missing blocks. The
     * first k with a valid partition is the answer.
     *
     * With several workers, disjoint prefixes of the assignment are shared out;
     * the witness is still the first one in single-worker order.
     *
     * Throws CapacityError when n exceeds options.exact_limit (or 64).
     */
    auto solve(const Graph & g, DominationStyle style, const SolverOptions & options = { }) -> SolveResult;

    struct DomaticConstruction
    {
        Partition partition;
        int strong_domatic_number = 0;
        bool extra_block = false;  ///< leftover of the last domatic block kept as its own block
    };

    /**
     * Builds a strong coalition partition with at least twice the strong
     * domatic number of blocks: shrink all but the last domatic block to
     * minimal strong dominating sets, split each into {first vertex} and the
     * rest, then deal with the last block's minimal core and leftovers.
     * Throws PreconditionError if g has a universal vertex or fewer than two vertices.
     */
    auto construct_from_domatic(const Graph & g) -> DomaticConstruction;
}

#endif
