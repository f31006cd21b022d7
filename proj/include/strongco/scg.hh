/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef STRONGCO_GUARD_SCG_HH
#define STRONGCO_GUARD_SCG_HH 1

#include <strongco/coalition.hh>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace strongco
{
    /// One vertex per block of a valid partition; blocks i and j adjacent iff they form a coalition.
    struct CoalitionGraph
    {
        Partition base_partition;
        std::vector<std::string> vertex_labels;  ///< "V<i>={members}", i 1-based
        std::vector<std::pair<int, int>> edges;  ///< 0-based block indices, i < j, sorted

        auto degree(int block) const -> int;
    };

    /// Thrown by build_scg for a partition that is not a coalition partition.
    class InvalidPartitionError : public std::invalid_argument
    {
        private:
            PartitionReport _report;

        public:
            InvalidPartitionError(const std::string & message, PartitionReport report);

            auto report() const -> const PartitionReport &
            {
                return _report;
            }
    };

    auto build_scg(const Graph & g, const Partition & p, DominationStyle style) -> CoalitionGraph;

    /// Undirected DOT with 1-based node ids; byte-identical for identical input.
    auto export_dot(const CoalitionGraph & cg) -> std::string;
}

#endif
