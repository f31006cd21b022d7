/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef STRONGCO_GUARD_TESTS_BRUTE_FORCE_HH
#define STRONGCO_GUARD_TESTS_BRUTE_FORCE_HH 1

// Reference implementations written straight from the definitions, over
// std::set and adjacency lists. They share nothing with the library's search
// code beyond reading a Graph's edge list, and are only fit for tiny graphs.

#include <strongco/graph.hh>

#include <set>
#include <vector>

namespace brute
{
    using Set = std::set<int>;
    using Blocks = std::vector<Set>;

    struct Adjacency
    {
        int n = 0;
        std::vector<Set> neighbours;

        explicit Adjacency(const strongco::Graph & g);
        auto degree(int v) const -> int { return static_cast<int>(neighbours[v].size()); }
    };

    auto dominates(const Adjacency & g, const Set & s, bool strong) -> bool;

    auto all_subsets(int n) -> std::vector<Set>;

    /// Every set partition of {0..n-1}, no pruning.
    auto all_partitions(int n) -> std::vector<Blocks>;

    auto gamma(const Adjacency & g, bool strong) -> int;
    auto count_dominating_sets(const Adjacency & g, bool strong) -> long long;
    auto domatic_number(const Adjacency & g, bool strong) -> int;

    auto is_coalition_partition(const Adjacency & g, const Blocks & p, bool strong) -> bool;

    /// Largest valid coalition partition over all set partitions, 0 if none.
    auto coalition_number(const Adjacency & g, bool strong) -> int;

    /// Pairs (i, j), i < j, 1-based, of blocks forming a coalition.
    auto coalition_pairs(const Adjacency & g, const Blocks & p, bool strong) -> std::vector<std::pair<int, int>>;
}

#endif
